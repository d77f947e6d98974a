//! The worked examples shipped with the crate, as spec documents.

use std::path::Path;

use crate::spec_io::{self, PentadSpec, SpecError};

/// A named spec with the truncation degree it is checked at.
#[derive(Clone, Copy, Debug)]
pub struct Fixture {
    pub name: &'static str,
    pub text: &'static str,
    pub max_degree: usize,
    /// Total dimension of the algebra, `None` when it is infinite.
    pub total_dim: Option<usize>,
}

impl Fixture {
    pub fn load(&self) -> Result<PentadSpec, SpecError> {
        spec_io::resolve(&spec_io::parse_document(self.text)?, Path::new("."))
    }
}

macro_rules! fixture {
    ($name:literal, $degree:expr, $total:expr) => {
        Fixture {
            name: $name,
            text: include_str!(concat!("../fixtures/", $name, ".json")),
            max_degree: $degree,
            total_dim: $total,
        }
    };
}

pub const ALL: &[Fixture] = &[
    fixture!("sl3_first", 4, Some(8)),
    fixture!("sl3_second", 4, Some(8)),
    fixture!("commutative_pair", 3, Some(4)),
    fixture!("noncommutative_pair", 3, Some(4)),
    fixture!("sl2", 3, Some(3)),
    fixture!("loop_sl2", 5, None),
    fixture!("affine_a1", 4, None),
    fixture!("gl3_natural_s2", 5, Some(15)),
    fixture!("gl3_natural_s1", 6, Some(21)),
];

pub fn by_name(name: &str) -> Option<&'static Fixture> {
    ALL.iter().find(|f| f.name == name)
}
