//! The four adjunction instances the translation is exercised against.

pub mod error;
pub mod reader;
pub mod state;
pub mod writer;
