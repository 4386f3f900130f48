use braidulam::classifier::certificate::{classify_ma_with, Evidence, SampleOptions};
use braidulam::classifier::diagram::{check_diagram, diagram_from_witness, DiagramSetting};
use braidulam::classifier::parity::{parity_certificate, sample_candidate, CandidateFamily};
use braidulam::classifier::witness::{verify_system, witness_ma, WitnessTriple};
use braidulam::fundamental_groups::{sn_equivalent, SnResult};
use braidulam::{
    classify, classify_ma, classify_t3, verify_certificate, Certificate, ClassDescriptor, HomClassMA, HomClassT3,
    Involution, Verdict,
};
use proptest::prelude::*;
use rand::SeedableRng;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn odd_classes_have_witnesses(k in -6i64..=6, s in -5i64..=5, u in -5i64..=5, v in -5i64..=5) {
        let cls = HomClassMA::new(2 * k + 1, s, u, v);
        let w = witness_ma(&cls).unwrap();
        for c in verify_system(&w, &cls) {
            prop_assert!(c.passed, "{}: {} vs {}", c.label, c.lhs, c.rhs);
        }
        prop_assert!(check_diagram(&diagram_from_witness(&w).unwrap(), &DiagramSetting::Ma(cls)).unwrap().passed());
    }

    #[test]
    fn even_classes_are_obstructed(k in -6i64..=6, s in -5i64..=5, u in -5i64..=5, v in -5i64..=5, seed in any::<u64>()) {
        let cls = HomClassMA::new(2 * k, s, u, v);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let cand = sample_candidate(&mut rng, 4, 3);
        let rep = parity_certificate(&cls, &cand).unwrap();
        prop_assert!(rep.gamma_residual.is_zero());
        prop_assert!(rep.epsilon_odd);
        prop_assert_eq!(rep.epsilon, rep.epsilon_formula);
    }

    #[test]
    fn certificates_round_trip_and_verify(r in -6i64..=6, s in -4i64..=4, u in -4i64..=4, v in -4i64..=4) {
        let cert = classify_ma(&HomClassMA::new(r, s, u, v)).unwrap();
        let json = serde_json::to_string(&cert).unwrap();
        let back: Certificate = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(&back, &cert);
        prop_assert!(verify_certificate(&back).unwrap().verified);
        prop_assert_eq!(cert.verdict == Verdict::Bup, r % 2 == 0);
    }

    #[test]
    fn t3_certificates_verify(m in prop::array::uniform6(-3i64..=3), tau1 in any::<bool>()) {
        let inv = if tau1 { Involution::Tau1 } else { Involution::Tau2 };
        let cls = HomClassT3::new(m[0], m[1], m[2], m[3], m[4], m[5]);
        let cert = classify_t3(&cls, inv).unwrap();
        let back: Certificate = serde_json::from_str(&serde_json::to_string(&cert).unwrap()).unwrap();
        prop_assert!(verify_certificate(&back).unwrap().verified);
        if let Evidence::T3Rule { diagram, .. } = &cert.evidence {
            prop_assert_eq!(diagram.is_some(), cert.verdict == Verdict::NotBup);
        }
    }

    #[test]
    fn fiber_conjugation_shifts_u(r in -3i64..=3, s in -3i64..=3, u in -3i64..=3, v in -3i64..=3, d in -3i64..=3) {
        let h1 = HomClassMA::new(r, s, u, v);
        let h2 = HomClassMA::new(r, s, u - d, v);
        match sn_equivalent(&h1, &h2, 4) {
            SnResult::Equivalent { a: _, b } => prop_assert!(r == 0 || b == d, "{h1} {h2} b={b}"),
            other => prop_assert!(false, "{other:?}"),
        }
    }
}

#[test]
fn witness_lies_in_the_candidate_family() {
    // x^(r-k) (x B^-1)^k = x^r · prod of x-conjugates of B^∓1
    use braidulam::classifier::ConjFactor;
    for r in [-7, -5, -3, -1, 1, 3, 5, 7] {
        let cls = HomClassMA::new(r, 2, -1, 3);
        let k: i64 = (r + 1) / 2;
        let a1: Vec<ConjFactor> = if k >= 0 {
            (1..=k).map(|i| ConjFactor::new(i - k, 0, -1)).collect()
        } else {
            (0..-k).map(|i| ConjFactor::new(-k - i, 0, 1)).collect()
        };
        let cand = CandidateFamily { a1, ..CandidateFamily::default() };
        assert_eq!(cand.build(&cls).unwrap(), witness_ma(&cls).unwrap(), "r={r}");
    }
}

#[test]
fn tampered_witness_text_is_rejected() {
    let cls = HomClassMA::new(1, 0, 0, 0);
    let mut cert = classify_ma(&cls).unwrap();
    if let Evidence::Witness { triple, .. } = &mut cert.evidence {
        triple.p1 = "(x y ; 0, 0)".into();
    }
    assert!(!verify_certificate(&cert).unwrap().verified);

    let mut cert = classify_ma(&HomClassMA::new(1, 0, 0, 0)).unwrap();
    if let Evidence::Witness { triple, .. } = &mut cert.evidence {
        triple.p1 = "(x y ; 0".into();
    }
    assert!(verify_certificate(&cert).is_err());
}

#[test]
fn wrong_class_in_parity_certificate_fails() {
    let mut cert = classify_ma(&HomClassMA::new(2, 0, 0, 0)).unwrap();
    cert.class = ClassDescriptor::Ma { class: HomClassMA::new(3, 0, 0, 0) };
    assert!(!verify_certificate(&cert).unwrap().verified);
}

#[test]
fn sampled_certificate_is_reproducible() {
    let o = SampleOptions { seed: 42, samples: 50, max_factors: 4, max_exp: 3 };
    let a = classify_ma_with(&HomClassMA::new(-2, 1, 1, 1), Some(o)).unwrap();
    let b = classify_ma_with(&HomClassMA::new(-2, 1, 1, 1), Some(o)).unwrap();
    assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    assert!(verify_certificate(&a).unwrap().verified);
}

#[test]
fn dispatch_rejects_mismatched_involutions() {
    let ma = ClassDescriptor::Ma { class: HomClassMA::new(1, 0, 0, 0) };
    assert!(classify(&ma, Some(Involution::Tau1)).is_err());
    assert!(classify(&ma, None).is_ok());
    let t3 = ClassDescriptor::t3(&HomClassT3::new(1, 0, 0, 1, 0, 0));
    assert!(classify(&t3, None).is_err());
    assert!(classify(&t3, Some(Involution::Tau)).is_err());
    assert_eq!(classify(&t3, Some(Involution::Tau1)).unwrap().verdict, Verdict::NotBup);
}

#[test]
fn certificate_json_shape() {
    let cert = classify_ma(&HomClassMA::new(2, 0, 0, 0)).unwrap();
    let v: serde_json::Value = serde_json::to_value(&cert).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["verdict"], "BUP");
    assert_eq!(v["class"]["bundle"], "MA");
    assert_eq!(v["class"]["class"]["r"], 2);
    assert_eq!(v["involution"], "tau");
    assert_eq!(v["evidence"]["kind"], "parity");
    let t = classify_t3(&HomClassT3::from_matrix([[1, 0, 0], [0, 1, 0]]), Involution::Tau1).unwrap();
    let v: serde_json::Value = serde_json::to_value(&t).unwrap();
    assert_eq!(v["verdict"], "not-BUP");
    assert_eq!(v["class"]["matrix"], serde_json::json!([[1, 0, 0], [0, 1, 0]]));
    assert_eq!(v["evidence"]["kind"], "t3-rule");
}

#[test]
fn witness_text_round_trip() {
    let w = witness_ma(&HomClassMA::new(-3, 1, 2, -2)).unwrap();
    assert_eq!(WitnessTriple::from_text(&w.to_text()).unwrap(), w);
}
