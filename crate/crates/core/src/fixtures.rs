//! Bundled graphs: five standard graphs on six cells and a two-sheeted cover
//! of the `(3,2,1)` graph that passes every axiom but the last.

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::graph::{from_json, SignedColoredGraph};

pub const COVER_SHA256: &str = "9fc8d5ca6f247d6a374f35e3a8bd02022a02ec3b52e979a294ba3f8043c536eb";

const BUNDLED: [(&str, &str); 6] = [
    ("g51", include_str!("../../../fixtures/g51.json")),
    ("g42", include_str!("../../../fixtures/g42.json")),
    ("g33", include_str!("../../../fixtures/g33.json")),
    ("g411", include_str!("../../../fixtures/g411.json")),
    ("g321", include_str!("../../../fixtures/g321.json")),
    ("musiker", include_str!("../../../fixtures/musiker.json")),
];

/// Partition of each bundled standard graph.
pub const STANDARD: [(&str, &str); 5] =
    [("g51", "5,1"), ("g42", "4,2"), ("g33", "3,3"), ("g411", "4,1,1"), ("g321", "3,2,1")];

pub fn names() -> impl Iterator<Item = &'static str> {
    BUNDLED.iter().map(|(n, _)| *n)
}

pub fn sha256_hex(text: &str) -> String {
    Sha256::digest(text.as_bytes()).iter().map(|b| format!("{b:02x}")).collect()
}

/// Raw JSON of a bundled fixture.
pub fn fixture_text(name: &str) -> Result<&'static str> {
    BUNDLED
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, t)| *t)
        .ok_or_else(|| Error::Fixture(format!("no bundled fixture named {name:?}")))
}

/// Parses a fixture, checking the pinned hash where there is one.
pub fn load_text(name: &str, text: &str) -> Result<SignedColoredGraph> {
    if name == "musiker" {
        let h = sha256_hex(text);
        if h != COVER_SHA256 {
            return Err(Error::Fixture(format!("cover fixture hash mismatch: {h}")));
        }
    }
    from_json(text)
}

pub fn fixture(name: &str) -> Result<SignedColoredGraph> {
    load_text(name, fixture_text(name)?)
}
