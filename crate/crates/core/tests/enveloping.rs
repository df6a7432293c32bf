use std::path::PathBuf;

use rbdend::enveloping::{
    check_dendriform_morphism, ideal_generators, verify_envelope, FiniteDendriform, OracleElement, RbOracle,
};
use rbdend::{Error, Flavor, Scalar};

fn data(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "data", name].iter().collect();
    std::fs::read_to_string(path).unwrap()
}

fn load(name: &str, o: &RbOracle) -> (FiniteDendriform, Vec<OracleElement>) {
    let file = FiniteDendriform::parse(&data(name)).unwrap();
    let images = file.images.unwrap().into_iter().map(|c| o.element(c).unwrap()).collect();
    (file.algebra, images)
}

#[test]
fn sequence_file_matches_induced_structure() {
    let o = RbOracle::sequences(3, Scalar::one()).unwrap();
    let (d, f) = load("sequences3.dend", &o);
    let (induced, _) = FiniteDendriform::from_induced(&o, Flavor::Trialgebra).unwrap();
    assert_eq!(d, induced);
    let report = verify_envelope(&d, &f, &o, &Scalar::one(), None).unwrap();
    assert!(report.pass);
}

#[test]
fn polynomial_file_is_annihilated() {
    let o = RbOracle::polynomials(Some(2));
    let (d, f) = load("polynomials2.dend", &o);
    assert_eq!(d.flavor(), Flavor::Dialgebra);
    let report = verify_envelope(&d, &f, &o, &Scalar::zero(), Some(4)).unwrap();
    assert_eq!(report.entries.len(), 8);
    assert!(report.pass);
}

#[test]
fn corrupted_file_is_rejected_before_annihilation() {
    let o = RbOracle::sequences(3, Scalar::one()).unwrap();
    let (d, f) = load("corrupted.dend", &o);
    assert!(matches!(
        verify_envelope(&d, &f, &o, &Scalar::one(), None),
        Err(Error::AxiomViolation { .. })
    ));
}

#[test]
fn swapped_images_are_not_a_morphism() {
    let o = RbOracle::sequences(3, Scalar::one()).unwrap();
    let (d, mut f) = load("sequences3.dend", &o);
    f.swap(0, 2);
    assert!(matches!(
        check_dendriform_morphism(&d, &f, &o),
        Err(Error::NotDendriformMorphism { .. })
    ));
}

#[test]
fn generators_vanish_only_under_the_right_map() {
    // the generators are nonzero in the free algebra; only their images vanish
    let o = RbOracle::sequences(3, Scalar::one()).unwrap();
    let (d, _) = load("sequences3.dend", &o);
    let ctx = d.free_context(Scalar::one()).unwrap();
    for x in d.basis().generators() {
        for y in d.basis().generators() {
            let [g1, g2] = ideal_generators(&d, &ctx, x, y).unwrap();
            assert!(!g1.is_zero() && !g2.is_zero());
        }
    }
}

#[test]
fn trialgebra_envelope_needs_unit_weight() {
    let o = RbOracle::sequences(3, Scalar::from_int(2)).unwrap();
    let (d, f) = FiniteDendriform::from_induced(&o, Flavor::Trialgebra).unwrap();
    assert!(matches!(
        verify_envelope(&d, &f, &o, &Scalar::from_int(2), None),
        Err(Error::NotMultiplicative { .. })
    ));
}

#[test]
fn dialgebra_envelope_at_nonzero_weight() {
    let o = RbOracle::sequences(4, Scalar::from_int(-3)).unwrap();
    let (d, f) = FiniteDendriform::from_induced(&o, Flavor::Dialgebra).unwrap();
    let report = verify_envelope(&d, &f, &o, &Scalar::from_int(-3), None).unwrap();
    assert_eq!(report.entries.len(), 32);
    assert!(report.pass);
}

#[test]
fn report_json_shape() {
    let o = RbOracle::sequences(2, Scalar::one()).unwrap();
    let (d, f) = FiniteDendriform::from_induced(&o, Flavor::Trialgebra).unwrap();
    let report = verify_envelope(&d, &f, &o, &Scalar::one(), Some(1)).unwrap();
    let v = serde_json::to_value(&report).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["flavor"], "trialgebra");
    let entries = v["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 2);
    for entry in entries {
        assert_eq!(entry["pair"], serde_json::json!(["e0", "e0"]));
        assert_eq!(entry["residual_terms"], 0);
        assert_eq!(entry["pass"], true);
        assert!(entry["generator"].is_string());
    }
}
