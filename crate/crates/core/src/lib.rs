//! Visual right-angled Artin subgroups of right-angled Coxeter groups.

pub mod caps;
pub mod cli;
pub mod completion;
pub mod conditions;
pub mod decision;
pub mod error;
pub mod families;
pub mod format;
pub mod graph;
pub mod kernel;
pub mod lambda;
pub mod reflections;
pub mod theta;
pub mod word;

pub use error::{Error, Result};
