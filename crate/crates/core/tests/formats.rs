mod common;

use common::iv;
use proptest::prelude::*;
use toricfan::datasets::barnette_fan;
use toricfan::fan::coordinate_fan;
use toricfan::formats::{parse_int_list, ComplexDocument, FanDocument, FormatError, RealizationDocument, ReportDocument};
use toricfan::{desingularize_barnette, suspend_fan, underlying_complex, Fan, Realization, RatVector};

#[test]
fn shipped_fans_round_trip() {
    for fan in [barnette_fan(), desingularize_barnette().0, suspend_fan(&barnette_fan()), coordinate_fan(3)] {
        let text = FanDocument::from_fan(&fan, None).to_canonical_string();
        let back = FanDocument::parse(&text).unwrap().to_fan().unwrap();
        assert_eq!(back, fan);
        assert_eq!(FanDocument::from_fan(&back, None).to_canonical_string(), text);
    }
}

#[test]
fn complex_round_trip() {
    let c = underlying_complex(&desingularize_barnette().0);
    let doc = ComplexDocument::from_complex(&c, None);
    let text = doc.to_canonical_string();
    let back: ComplexDocument = serde_json::from_str(&text).unwrap();
    assert!(back.to_complex().unwrap().same_labelled(&c));
}

#[test]
fn realization_keeps_exact_rationals() {
    let r = Realization::new(
        [("a".to_string(), RatVector::from_fractions(&[(1, 3), (-7, 2)])), ("b".to_string(), RatVector::from_fractions(&[(0, 1), (5, 1)]))]
            .into_iter()
            .collect(),
    )
    .unwrap();
    let text = RealizationDocument::from_realization(&r).to_canonical_string();
    assert!(text.contains("\"1/3\"") && text.contains("\"-7/2\""));
    let back: RealizationDocument = serde_json::from_str(&text).unwrap();
    assert_eq!(back.to_realization().unwrap(), r);
}

#[test]
fn report_digest_depends_on_inputs() {
    let a = ReportDocument::new("verify", &[b"x"]);
    let b = ReportDocument::new("verify", &[b"y"]);
    let c = ReportDocument::new("verify", &[b"x"]);
    assert_ne!(a.inputs_digest, b.inputs_digest);
    assert_eq!(a.inputs_digest, c.inputs_digest);
    // split points matter
    assert_ne!(ReportDocument::new("c", &[b"ab", b"c"]).inputs_digest, ReportDocument::new("c", &[b"a", b"bc"]).inputs_digest);
    let mut r = a;
    r.push("one", true, serde_json::json!({}));
    assert!(r.verdict);
    r.push("two", false, serde_json::json!({}));
    assert!(!r.verdict);
}

#[test]
fn bad_inputs() {
    assert!(matches!(FanDocument::parse("{"), Err(FormatError::Json(_))));
    assert!(matches!(parse_int_list("1,x"), Err(FormatError::BadInteger(_))));
    assert_eq!(parse_int_list(" 1, -2,0").unwrap(), iv(&[1, -2, 0]));
    let mut doc = FanDocument::from_fan(&barnette_fan(), None);
    doc.max_cones[0].rays[0] = "zz".into();
    assert!(matches!(doc.to_fan(), Err(FormatError::Fan(_))));
}

fn random_fan() -> impl Strategy<Value = Fan> {
    // coordinate fans with rays scaled by a random unimodular shear stay valid
    (1usize..=4, -3i64..=3).prop_map(|(n, k)| {
        let base = coordinate_fan(n);
        if n < 2 {
            return base;
        }
        let rays = base
            .rays()
            .iter()
            .map(|r| {
                let mut v = r.vector.to_i64().unwrap();
                v[0] += k * v[1];
                (r.label.clone(), iv(&v))
            })
            .collect();
        let cones = (0..base.cones().len()).map(|c| (None, base.cone_labels(c).iter().map(|s| s.to_string()).collect())).collect();
        Fan::from_labels(n, rays, cones).unwrap()
    })
}

proptest! {
    #[test]
    fn fan_documents_round_trip(fan in random_fan()) {
        let text = FanDocument::from_fan(&fan, None).to_canonical_string();
        prop_assert_eq!(FanDocument::parse(&text).unwrap().to_fan().unwrap(), fan);
    }
}
