//! Bundled example categories, frozen as spec files in `datasets/`.
//!
//! The data was derived by an independent brute-force computation in the
//! module category of the self-injective Nakayama algebra with three simples
//! and Loewy length three; `scripts/derive_nakayama.py` at the repository
//! root regenerates it.
//!
//! * `nakayama_D`: the stable category, a triangulated category with six
//!   indecomposables `1, 2, 3, 2/1, 3/2, 1/3`, shift data, and
//!   `E^{-1}(C, A) = Hom(C, shift^{-1} A)`.
//! * `nakayama_A_e1`: the extension-closed subcategory `add{1, 2/1, 2}`
//!   (an abelian category) with the zero negative extension.
//! * `nakayama_A_e2`: the same subcategory with the negative extension
//!   restricted from the stable category, where `E^{-1}(2, 1)` is nonzero.

use crate::category::FiniteExtCat;
use crate::error::{Error, Result};

pub const DATASET_NAMES: [&str; 3] = ["nakayama_D", "nakayama_A_e1", "nakayama_A_e2"];

/// The raw spec-file text of a bundled dataset.
pub fn dataset_spec_text(name: &str) -> Result<&'static str> {
    match name {
        "nakayama_D" => Ok(include_str!("../datasets/nakayama_D.json")),
        "nakayama_A_e1" => Ok(include_str!("../datasets/nakayama_A_e1.json")),
        "nakayama_A_e2" => Ok(include_str!("../datasets/nakayama_A_e2.json")),
        other => Err(Error::UnknownDataset(other.to_string())),
    }
}

/// Load a bundled dataset by name.
pub fn dataset(name: &str) -> Result<FiniteExtCat> {
    FiniteExtCat::from_spec_str(dataset_spec_text(name)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_name_is_an_error() {
        assert!(matches!(dataset("nope"), Err(Error::UnknownDataset(_))));
    }

    #[test]
    fn stable_category_has_the_six_objects() {
        let cat = dataset("nakayama_D").unwrap();
        let names: Vec<&str> = cat.indec_names().collect();
        assert_eq!(names, ["1", "2", "3", "2/1", "3/2", "1/3"]);
        assert!(cat.has_shift());
        assert!(cat.validate_lints().is_empty());
    }

    #[test]
    fn restriction_of_stable_category_is_the_a2_subcategory() {
        let d = dataset("nakayama_D").unwrap();
        let h = d.subcat(["1", "2/1", "2"]).unwrap();
        let restricted = d.restrict_to(&h).unwrap();
        let e2 = dataset("nakayama_A_e2").unwrap();
        assert_eq!(
            restricted.indec_names().collect::<Vec<_>>(),
            e2.indec_names().collect::<Vec<_>>()
        );
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(restricted.hom_dim(i, j), e2.hom_dim(i, j));
                assert_eq!(restricted.negext_dim(i, j), e2.negext_dim(i, j));
                assert_eq!(restricted.ext_dim(i, j), e2.ext_dim(i, j));
            }
        }
        // the shift does not preserve the subcategory, so it is dropped
        assert!(!restricted.has_shift());
        for m in 0..3 {
            let mut a: Vec<_> = restricted
                .conf_rows(m)
                .iter()
                .map(|r| (restricted.obj_names(&r.sub), restricted.obj_names(&r.quot)))
                .collect();
            let mut b: Vec<_> = e2
                .conf_rows(m)
                .iter()
                .map(|r| (e2.obj_names(&r.sub), e2.obj_names(&r.quot)))
                .collect();
            a.sort();
            b.sort();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn nonvanishing_negative_extension_witness() {
        let e2 = dataset("nakayama_A_e2").unwrap();
        let two = e2.index_of("2").unwrap();
        let one = e2.index_of("1").unwrap();
        assert_eq!(e2.negext_dim(two, one), 1);
        let e1 = dataset("nakayama_A_e1").unwrap();
        assert_eq!(e1.negext_dim(two, one), 0);
    }
}
