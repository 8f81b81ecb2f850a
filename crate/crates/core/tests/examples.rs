use motzkin_core::axioms::{descent_distribution, run_suite, Suite};
use motzkin_core::paths::{enumerate_paths, motzkin_number, phi, phi_prime, rho_inverse, shift};
use motzkin_core::tableaux::{gamma, gamma_tilde, promotion};
use motzkin_core::{
    CyclicDescentSet, Error, MotzkinPath, SkewShape, SkewTableau, StepOrder, VerificationReport,
};

fn p(s: &str) -> MotzkinPath {
    MotzkinPath::parse(s).unwrap()
}

#[test]
fn cyclic_descent_labels() {
    assert_eq!(
        p("LUDLUD")
            .cyclic_descent_set(StepOrder::Udl)
            .unwrap()
            .to_string(),
        "2,3,5,6"
    );
    assert_eq!(
        p("ULUDLD")
            .cyclic_descent_set(StepOrder::Udl)
            .unwrap()
            .to_string(),
        "1,3,4,6"
    );
    assert_eq!(
        p("LUDUDL")
            .cyclic_descent_set(StepOrder::Uld)
            .unwrap()
            .to_string(),
        "2,4,6"
    );
    assert_eq!(
        p("LLLL").cyclic_descent_set(StepOrder::Lud),
        Err(Error::AllLevelPath)
    );
}

#[test]
fn shifts() {
    assert_eq!(shift(&p("LUDUDL"), StepOrder::Udl).unwrap(), p("LLUDUD"));
    assert_eq!(rho_inverse(&p("LLUDUD")).unwrap(), p("LUDUDL"));
    // The LUD shift is ρ̂ conjugated by φ′.
    for m in enumerate_paths(7).filter(|m| !m.is_all_level()) {
        let lud = shift(&m, StepOrder::Lud).unwrap();
        assert_eq!(
            phi_prime(&lud),
            shift(&phi_prime(&m), StepOrder::Uld).unwrap()
        );
    }
}

#[test]
fn transport_is_descent_preserving() {
    for m in enumerate_paths(8) {
        assert_eq!(
            phi(&m).descent_set(StepOrder::Udl),
            m.descent_set(StepOrder::Uld)
        );
    }
    assert_eq!(
        descent_distribution(8, StepOrder::Udl).total(),
        motzkin_number(8).unwrap() as u64
    );
}

#[test]
fn tableau_maps() {
    let t = gamma(&p("LUDLUD"));
    assert_eq!(t.to_compact_string(), "2,5|3,6|1,4");
    assert_eq!(t.to_string(), ".,.,2,5|.,.,3,6|1,4");
    assert_eq!(t.shape(), &SkewShape::strip(6, 2).unwrap());
    assert_eq!(gamma_tilde(&p("LUDLUD")).to_string(), "1,2,5|3,6|4");
    let first = SkewTableau::parse_strip("1|3|2,4,5,6").unwrap();
    assert_eq!(promotion(&first).to_compact_string(), "2|4|1,3,5,6");
}

#[test]
fn serde_uses_text_forms() {
    let m = p("ULUDLD");
    let json = serde_json::to_string(&m).unwrap();
    assert_eq!(json, "\"ULUDLD\"");
    assert_eq!(serde_json::from_str::<MotzkinPath>(&json).unwrap(), m);
    let t = gamma(&m);
    let back: SkewTableau = serde_json::from_str(&serde_json::to_string(&t).unwrap()).unwrap();
    assert_eq!(back, t);
    assert!(serde_json::from_str::<MotzkinPath>("\"DU\"").is_err());
    let c = CyclicDescentSet::parse(6, "1,3,4,6").unwrap();
    let back: CyclicDescentSet = serde_json::from_str(&serde_json::to_string(&c).unwrap()).unwrap();
    assert_eq!(back, c);
}

#[test]
fn report_documents_round_trip() {
    let r = run_suite(Suite::Axioms, 2, 4);
    assert!(r.passed);
    assert_eq!(
        VerificationReport::from_document(&r.to_document()).unwrap(),
        r
    );
    assert_eq!(VerificationReport::from_json(&r.to_json()).unwrap(), r);
}
