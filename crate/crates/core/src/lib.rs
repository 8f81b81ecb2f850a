//! Cyclic descent extensions on Motzkin paths and on three-row skew standard
//! Young tableaux.
//!
//! * [`paths`]: enumeration, descent and cyclic descent statistics under the
//!   orders `U>D>L`, `U>L>D` and `L>U>D`, and the shift bijections.
//! * [`tableaux`]: skew standard Young tableaux, jeu de taquin, promotion and
//!   the descent-preserving bijection between paths and strip-shaped tableaux.
//! * [`axioms`]: exhaustive verification suites with structured reports.
//!
//! ```
//! use motzkin_core::paths::shift;
//! use motzkin_core::tableaux::{gamma, promotion};
//! use motzkin_core::{MotzkinPath, StepOrder};
//!
//! let m = MotzkinPath::parse("LUDUDL")?;
//! let c = m.cyclic_descent_set(StepOrder::Udl)?;
//! let next = shift(&m, StepOrder::Udl)?;
//! assert_eq!(next.cyclic_descent_set(StepOrder::Udl)?, c.rotate(1));
//! assert_eq!(promotion(&gamma(&m)), gamma(&next));
//! # Ok::<(), motzkin_core::Error>(())
//! ```

pub mod axioms;
pub mod error;
pub mod paths;
pub mod sets;
pub mod tableaux;

pub use axioms::{Suite, VerificationReport};
pub use error::{Error, Result};
pub use paths::{MotzkinPath, Step, StepOrder};
pub use sets::{CyclicDescentSet, DescentSet};
pub use tableaux::{Cell, SkewShape, SkewTableau};
