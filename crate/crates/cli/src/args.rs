use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use motzkin_core::{StepOrder, Suite};

#[derive(Debug, Parser)]
#[command(
    name = "motzkin",
    version,
    about = "Cyclic descents on Motzkin paths and three-row tableaux"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Order {
    #[value(name = "UDL", alias = "udl")]
    Udl,
    #[value(name = "ULD", alias = "uld")]
    Uld,
    #[value(name = "LUD", alias = "lud")]
    Lud,
}

impl From<Order> for StepOrder {
    fn from(order: Order) -> Self {
        match order {
            Order::Udl => StepOrder::Udl,
            Order::Uld => StepOrder::Uld,
            Order::Lud => StepOrder::Lud,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Axioms,
    Equidist,
    Commutation,
    Counts,
    Bijections,
    Tableaux,
    All,
}

impl SuiteArg {
    pub fn suites(self) -> Vec<Suite> {
        match self {
            SuiteArg::Axioms => vec![Suite::Axioms],
            SuiteArg::Equidist => vec![Suite::Equidist],
            SuiteArg::Commutation => vec![Suite::Commutation],
            SuiteArg::Counts => vec![Suite::Counts],
            SuiteArg::Bijections => vec![Suite::Bijections],
            SuiteArg::Tableaux => vec![Suite::Tableaux],
            SuiteArg::All => Suite::ALL.to_vec(),
        }
    }
}

#[derive(Debug, Args)]
pub struct Common {
    /// Step order used for descents.
    #[arg(long, value_enum, default_value = "UDL")]
    pub order: Order,

    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List all Motzkin paths of length n with their descent sets.
    Enumerate {
        #[arg(long)]
        n: usize,
        /// Only paths with this many horizontal steps.
        #[arg(long)]
        horizontal: Option<usize>,
        /// Draw each path below its line (text format only).
        #[arg(long)]
        ascii: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Descent or cyclic descent set of a path.
    Stat {
        path: String,
        #[arg(long, conflicts_with = "cdes")]
        des: bool,
        #[arg(long)]
        cdes: bool,
        #[arg(long)]
        ascii: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Apply the cyclic shift of the chosen order.
    Shift {
        path: String,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        times: u64,
        #[arg(long)]
        inverse: bool,
        #[arg(long)]
        ascii: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Full orbit of a path under its shift, or of a tableau under promotion.
    Orbit {
        #[arg(required_unless_present = "syt", conflicts_with = "syt")]
        path: Option<String>,
        /// Tableau in compact strip form ("1,4|2,6|3,5") or full form.
        #[arg(long)]
        syt: Option<String>,
        /// Act by promotion (implied by --syt).
        #[arg(long, requires = "syt")]
        promotion: bool,
        #[arg(long)]
        ascii: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Tableau operations.
    Syt {
        #[command(subcommand)]
        action: SytAction,
        #[arg(long, value_enum, default_value = "text", global = true)]
        format: Format,
    },
    /// Run verification suites over a range of n.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: SuiteArg,
        #[arg(long, default_value_t = 3)]
        n_min: usize,
        #[arg(long, default_value_t = 10)]
        n_max: usize,
        /// Write the key-value report document here.
        #[arg(long)]
        report: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

#[derive(Debug, Subcommand)]
pub enum SytAction {
    /// Path to its strip-shaped tableau.
    Gamma { path: String },
    /// Strip-shaped tableau back to its path.
    Ungamma { tableau: String },
    /// Rectify a skew tableau given in full form (".,.,2|1,3").
    Rectify { tableau: String },
    /// One promotion step.
    Promote { tableau: String },
}
