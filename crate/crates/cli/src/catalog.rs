//! Built-in manifold documents and their reference fixtures.

use std::collections::BTreeMap;

use kenmotsu_core::Rational;
use serde::Deserialize;

use crate::document::{parse_document, LoadedManifold, ManifoldDocument};

const ENTRIES: [(&str, &str); 4] = [
    ("abelian-flat-3d", include_str!("../catalog/abelian-flat-3d.json")),
    ("kenmotsu-example-5d", include_str!("../catalog/kenmotsu-example-5d.json")),
    ("kenmotsu-warped-3d", include_str!("../catalog/kenmotsu-warped-3d.json")),
    ("kenmotsu-warped-7d", include_str!("../catalog/kenmotsu-warped-7d.json")),
];

const FIXTURES: &str = include_str!("../catalog/fixtures.json");

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown catalog id {id:?}; available: {}", available().join(", "))]
pub struct UnknownCatalogId {
    pub id: String,
}

pub fn available() -> Vec<&'static str> {
    ENTRIES.iter().map(|(id, _)| *id).collect()
}

pub fn catalog_get(id: &str) -> Result<ManifoldDocument, UnknownCatalogId> {
    let (_, text) = ENTRIES
        .iter()
        .find(|(k, _)| *k == id)
        .ok_or_else(|| UnknownCatalogId { id: id.to_string() })?;
    Ok(parse_document(text).expect("catalog documents are well-formed"))
}

pub fn catalog_load(id: &str) -> Result<LoadedManifold, UnknownCatalogId> {
    Ok(catalog_get(id)?.lower().expect("catalog documents are valid"))
}

/// `R(e_x, e_y)e_z = value · e_component` as printed in a reference table.
#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
pub struct PublishedCurvature {
    pub x: usize,
    pub y: usize,
    pub z: usize,
    pub component: usize,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
pub struct RicciFixture {
    pub diagonal: String,
    pub off_diagonal: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
pub struct LieFixture {
    pub g: String,
    pub eta_eta: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
pub struct Relation {
    pub slope: String,
    pub intercept: String,
}

/// Expected values attached to a catalog entry, stored as rational strings.
#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
pub struct Fixture {
    pub ricci: RicciFixture,
    pub scalar: String,
    pub star_ricci_diagonal: Vec<String>,
    pub star_scalar: String,
    pub lie_z_metric: LieFixture,
    pub lie_z_trace: String,
    pub div_z: String,
    pub star_rb_z_omega: BTreeMap<String, String>,
    pub star_rb_z_omega_relation: Relation,
    pub q_flat_psi: String,
    pub published_curvature: Vec<PublishedCurvature>,
    pub provenance: Vec<String>,
}

pub fn fixtures() -> BTreeMap<String, Fixture> {
    serde_json::from_str(FIXTURES).expect("fixtures are well-formed")
}

pub fn fixture(name: &str) -> Option<Fixture> {
    fixtures().remove(name)
}

/// Parses a fixture value; fixtures are trusted input.
pub fn rat(s: &str) -> Rational {
    s.parse().expect("fixture rationals are well-formed")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::document::to_document;
    use kenmotsu_core::{family, levi_civita, manifold::validate_kenmotsu, rational::q};

    #[test]
    fn every_entry_loads_and_round_trips() {
        for id in available() {
            let m = catalog_load(id).unwrap();
            assert_eq!(m.spec.name(), id);
            let back = to_document(&m.spec, &m.fields).lower().unwrap();
            assert_eq!(back, m, "{id}");
        }
    }

    #[test]
    fn unknown_id_lists_the_catalog() {
        let e = catalog_get("nope").unwrap_err();
        let msg = e.to_string();
        for id in available() {
            assert!(msg.contains(id));
        }
    }

    #[test]
    fn entries_match_the_family_constructors() {
        assert_eq!(catalog_load("kenmotsu-warped-3d").unwrap().spec, family::kenmotsu_warped(1));
        assert_eq!(catalog_load("kenmotsu-warped-7d").unwrap().spec, family::kenmotsu_warped(3));
        assert_eq!(catalog_load("abelian-flat-3d").unwrap().spec, family::abelian_flat(1));
        let ex = catalog_load("kenmotsu-example-5d").unwrap().spec;
        assert_eq!(ex.brackets(), family::kenmotsu_warped(2).brackets());
    }

    #[test]
    fn example_phi_pairs_the_frame() {
        let ex = catalog_load("kenmotsu-example-5d").unwrap().spec;
        // φ(e1) = e3, φ(e2) = e4, φ(e3) = -e1, φ(e4) = -e2, φ(e5) = 0
        let phi = ex.phi();
        assert_eq!(phi[[2, 0]], q(1, 1));
        assert_eq!(phi[[3, 1]], q(1, 1));
        assert_eq!(phi[[0, 2]], q(-1, 1));
        assert_eq!(phi[[1, 3]], q(-1, 1));
        assert!((0..5).all(|k| phi[[k, 4]].is_zero()));
    }

    #[test]
    fn kenmotsu_entries_validate() {
        for id in ["kenmotsu-example-5d", "kenmotsu-warped-3d", "kenmotsu-warped-7d"] {
            let spec = catalog_load(id).unwrap().spec;
            let conn = levi_civita(&spec);
            assert!(validate_kenmotsu(&spec, &conn).unwrap().is_kenmotsu, "{id}");
        }
    }

    #[test]
    fn fixtures_parse() {
        let f = fixture("kenmotsu-example-5d").unwrap();
        assert_eq!(rat(&f.scalar), q(-20, 1));
        assert_eq!(f.published_curvature.len(), 20);
    }
}
