use std::fs;

use motzkin_core::axioms::{orbit, reports_to_document, run_suite, PathAction, PromotionAction};
use motzkin_core::paths::{
    enumerate_paths, enumerate_paths_fixed_horizontal, render_ascii, shift, shift_inverse,
};
use motzkin_core::tableaux::{gamma, gamma_inverse, promotion, rectify};
use motzkin_core::{MotzkinPath, SkewTableau, StepOrder, VerificationReport};
use serde::Serialize;

use crate::args::{Cli, Command, Common, Format, SytAction};
use crate::CliError;

pub const CEILING_VAR: &str = "MOTZKIN_VERIFY_CEILING";
const DEFAULT_CEILING: usize = 12;

pub fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Enumerate {
            n,
            horizontal,
            ascii,
            common,
        } => enumerate(n, horizontal, ascii, &common),
        Command::Stat {
            path,
            des,
            cdes,
            ascii,
            common,
        } => stat(&path, des || !cdes, ascii, &common),
        Command::Shift {
            path,
            times,
            inverse,
            ascii,
            common,
        } => shift_cmd(&path, times, inverse, ascii, &common),
        Command::Orbit {
            path,
            syt,
            ascii,
            common,
            ..
        } => match (path, syt) {
            (_, Some(t)) => orbit_syt(&t, common.format),
            (Some(p), None) => orbit_path(&p, ascii, &common),
            (None, None) => Err(CliError::Usage("give a path or --syt".into())),
        },
        Command::Syt { action, format } => syt(action, format),
        Command::Verify {
            suite,
            n_min,
            n_max,
            report,
            format,
        } => verify(&suite.suites(), n_min, n_max, report.as_deref(), format),
    }
}

fn print_json(value: &impl Serialize) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("output serializes")
    );
}

fn path_text(m: &MotzkinPath) -> String {
    if m.is_empty() {
        "(empty)".to_string()
    } else {
        m.to_string()
    }
}

fn print_drawing(m: &MotzkinPath) {
    if !m.is_empty() {
        println!("{}", render_ascii(m));
    }
}

/// Compact form for strip shapes, full form otherwise.
fn tableau_text(t: &SkewTableau) -> String {
    if t.shape().as_strip().is_some() {
        t.to_compact_string()
    } else {
        t.to_string()
    }
}

#[derive(Serialize)]
struct PathRow {
    path: MotzkinPath,
    des: String,
    cdes: Option<String>,
}

#[derive(Serialize)]
struct EnumerateOutput {
    n: usize,
    horizontal: Option<usize>,
    order: StepOrder,
    count: usize,
    paths: Vec<PathRow>,
}

fn enumerate(
    n: usize,
    horizontal: Option<usize>,
    ascii: bool,
    common: &Common,
) -> Result<(), CliError> {
    let order: StepOrder = common.order.into();
    let paths: Vec<MotzkinPath> = match horizontal {
        Some(k) => enumerate_paths_fixed_horizontal(n, k).collect(),
        None => enumerate_paths(n).collect(),
    };
    let rows: Vec<PathRow> = paths
        .iter()
        .map(|m| PathRow {
            path: m.clone(),
            des: m.descent_set(order).to_string(),
            cdes: m.cyclic_descent_set(order).ok().map(|c| c.to_string()),
        })
        .collect();
    if common.format == Format::Json {
        print_json(&EnumerateOutput {
            n,
            horizontal,
            order,
            count: rows.len(),
            paths: rows,
        });
        return Ok(());
    }
    for row in &rows {
        let cdes = match &row.cdes {
            Some(c) => format!("{{{c}}}"),
            None => "none (all-level path)".to_string(),
        };
        println!("{}\tDes={{{}}}\tcDes={cdes}", path_text(&row.path), row.des);
        if ascii {
            print_drawing(&row.path);
        }
    }
    println!("count {}", rows.len());
    Ok(())
}

#[derive(Serialize)]
struct StatOutput {
    path: MotzkinPath,
    order: StepOrder,
    #[serde(skip_serializing_if = "Option::is_none")]
    des: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    cdes: Option<String>,
}

fn stat(path: &str, des: bool, ascii: bool, common: &Common) -> Result<(), CliError> {
    let m = MotzkinPath::parse(path)?;
    let order: StepOrder = common.order.into();
    let value = if des {
        m.descent_set(order).to_string()
    } else {
        m.cyclic_descent_set(order)?.to_string()
    };
    if common.format == Format::Json {
        let (des, cdes) = if des {
            (Some(value), None)
        } else {
            (None, Some(value))
        };
        print_json(&StatOutput {
            path: m,
            order,
            des,
            cdes,
        });
    } else {
        println!("{value}");
        if ascii {
            print_drawing(&m);
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct ShiftOutput {
    path: MotzkinPath,
    order: StepOrder,
    times: u64,
    inverse: bool,
    image: MotzkinPath,
    cdes_before: String,
    cdes_after: String,
}

fn shift_cmd(
    path: &str,
    times: u64,
    inverse: bool,
    ascii: bool,
    common: &Common,
) -> Result<(), CliError> {
    let m = MotzkinPath::parse(path)?;
    let order: StepOrder = common.order.into();
    let before = m.cyclic_descent_set(order)?;
    let step = |p: &MotzkinPath| {
        if inverse {
            shift_inverse(p, order)
        } else {
            shift(p, order)
        }
    };
    // Once the orbit closes, only the remainder modulo its length matters.
    let mut image = m.clone();
    let mut done = 0;
    while done < times {
        image = step(&image)?;
        done += 1;
        if image == m {
            for _ in 0..(times % done) {
                image = step(&image)?;
            }
            break;
        }
    }
    let after = image.cyclic_descent_set(order)?;
    if common.format == Format::Json {
        print_json(&ShiftOutput {
            path: m,
            order,
            times,
            inverse,
            image,
            cdes_before: before.to_string(),
            cdes_after: after.to_string(),
        });
    } else {
        println!("{image}");
        println!("cDes before: {{{before}}}");
        println!("cDes after: {{{after}}}");
        if ascii {
            print_drawing(&m);
            println!();
            print_drawing(&image);
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct OrbitOutput {
    start: String,
    action: String,
    length: usize,
    elements: Vec<String>,
    cdes: Vec<String>,
}

fn print_orbit(out: &OrbitOutput, format: Format, drawings: Option<&[MotzkinPath]>) {
    if format == Format::Json {
        print_json(out);
        return;
    }
    for (i, (element, cdes)) in out.elements.iter().zip(&out.cdes).enumerate() {
        println!("{element}\tcDes={{{cdes}}}");
        if let Some(paths) = drawings {
            print_drawing(&paths[i]);
        }
    }
    println!("length {}", out.length);
}

fn orbit_path(path: &str, ascii: bool, common: &Common) -> Result<(), CliError> {
    let m = MotzkinPath::parse(path)?;
    let order: StepOrder = common.order.into();
    let record = orbit(&PathAction(order), &m, None)?;
    let out = OrbitOutput {
        start: m.to_string(),
        action: order.to_string(),
        length: record.len(),
        elements: record.elements.iter().map(ToString::to_string).collect(),
        cdes: record
            .cdes_sequence
            .iter()
            .map(ToString::to_string)
            .collect(),
    };
    print_orbit(&out, common.format, ascii.then_some(&record.elements[..]));
    Ok(())
}

fn orbit_syt(text: &str, format: Format) -> Result<(), CliError> {
    let t = SkewTableau::parse_strip_or_full(text)?;
    let record = orbit(&PromotionAction, &t, None)?;
    let out = OrbitOutput {
        start: tableau_text(&t),
        action: "promotion".into(),
        length: record.len(),
        elements: record.elements.iter().map(tableau_text).collect(),
        cdes: record
            .cdes_sequence
            .iter()
            .map(ToString::to_string)
            .collect(),
    };
    print_orbit(&out, format, None);
    Ok(())
}

#[derive(Serialize)]
struct SytOutput {
    action: &'static str,
    input: String,
    output: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    des: Option<String>,
}

fn syt(action: SytAction, format: Format) -> Result<(), CliError> {
    let out = match action {
        SytAction::Gamma { path } => {
            let m = MotzkinPath::parse(&path)?;
            let t = gamma(&m);
            SytOutput {
                action: "gamma",
                input: m.to_string(),
                output: tableau_text(&t),
                des: Some(t.descent_set().to_string()),
            }
        }
        SytAction::Ungamma { tableau } => {
            let t = SkewTableau::parse_strip_or_full(&tableau)?;
            let m = gamma_inverse(&t)?;
            SytOutput {
                action: "ungamma",
                input: tableau_text(&t),
                output: m.to_string(),
                des: None,
            }
        }
        SytAction::Rectify { tableau } => {
            let t = SkewTableau::parse(&tableau)?;
            let r = rectify(&t);
            SytOutput {
                action: "rectify",
                input: t.to_string(),
                output: r.to_string(),
                des: Some(r.descent_set().to_string()),
            }
        }
        SytAction::Promote { tableau } => {
            let t = SkewTableau::parse_strip_or_full(&tableau)?;
            SytOutput {
                action: "promote",
                input: tableau_text(&t),
                output: tableau_text(&promotion(&t)),
                des: None,
            }
        }
    };
    if format == Format::Json {
        print_json(&out);
    } else {
        println!("{}", out.output);
        if let Some(des) = out.des {
            println!("Des={{{des}}}");
        }
    }
    Ok(())
}

fn ceiling() -> Result<usize, CliError> {
    match std::env::var(CEILING_VAR) {
        Ok(v) => v.trim().parse().map_err(|_| {
            CliError::Usage(format!(
                "{CEILING_VAR} must be a non-negative integer, got {v:?}"
            ))
        }),
        Err(_) => Ok(DEFAULT_CEILING),
    }
}

#[derive(Serialize)]
struct VerifyOutput<'a> {
    passed: bool,
    reports: &'a [VerificationReport],
}

fn verify(
    suites: &[motzkin_core::Suite],
    n_min: usize,
    n_max: usize,
    report_path: Option<&std::path::Path>,
    format: Format,
) -> Result<(), CliError> {
    if n_min > n_max {
        return Err(CliError::Usage(format!(
            "--n-min {n_min} exceeds --n-max {n_max}"
        )));
    }
    let ceiling = ceiling()?;
    if n_max > ceiling {
        return Err(CliError::Usage(format!(
            "--n-max {n_max} exceeds the ceiling {ceiling} (set {CEILING_VAR} to raise it)"
        )));
    }
    let reports: Vec<VerificationReport> =
        suites.iter().map(|&s| run_suite(s, n_min, n_max)).collect();
    let passed = reports.iter().all(|r| r.passed);
    if let Some(path) = report_path {
        fs::write(path, reports_to_document(&reports)).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        })?;
    }
    if format == Format::Json {
        print_json(&VerifyOutput {
            passed,
            reports: &reports,
        });
    } else {
        for r in &reports {
            print_report(r);
        }
    }
    if passed {
        Ok(())
    } else {
        Err(CliError::Verification)
    }
}

fn print_report(r: &VerificationReport) {
    let status = if r.passed { "PASS" } else { "FAIL" };
    println!(
        "{status} {} n={}..{} cases={} elapsed_ms={}",
        r.suite, r.n_min, r.n_max, r.cases_checked, r.elapsed_ms
    );
    for (key, value) in &r.parameters {
        println!("  {key} = {value}");
    }
    for note in &r.notes {
        println!("  notice: {note}");
    }
    for f in &r.expected_failures {
        println!(
            "  expected failure [{}] witness={} expected={} actual={}",
            f.check, f.witness, f.expected, f.actual
        );
    }
    for f in &r.failures {
        eprintln!(
            "  failure [{}] witness={} expected={} actual={}",
            f.check, f.witness, f.expected, f.actual
        );
    }
}
