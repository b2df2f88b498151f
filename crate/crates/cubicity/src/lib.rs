//! File formats, random interval models and the tightness-search harness
//! around [`cubicity_core`].

pub mod formats;
pub mod gen;
pub mod search;
