pub mod chars;
pub mod error;
pub mod jacquet;
pub mod langlands;
pub mod literal;
pub mod reducibility;
pub mod reps;
pub mod rootsys;
pub mod theta;
pub mod verify;

pub use error::{Error, Result};
