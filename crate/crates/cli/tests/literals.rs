use proptest::prelude::*;
use qdouble::perm::interval;
use qdouble::{format_element, parse_element, LiteralLabel, Permutation, Rational, Scalar, Vector};

fn rational() -> impl Strategy<Value = Rational> {
    (-40i64..40, 1i64..12).prop_map(|(n, d)| Rational::new(n, d))
}

fn scalar() -> impl Strategy<Value = Scalar> {
    (rational(), rational()).prop_map(|(re, im)| Scalar::new(re, im))
}

fn base_label() -> impl Strategy<Value = LiteralLabel> {
    prop_oneof![
        (1u64..30).prop_flat_map(|m| (Just(m), 0..m))
            .prop_map(|(modulus, residue)| LiteralLabel::Cyclic { modulus, residue }),
        (-3i64..2, 1usize..6).prop_flat_map(|(lo, len)| {
            let ground = interval(lo, lo + len as i64 - 1);
            let idx: Vec<u32> = (0..len as u32).collect();
            (Just(ground), Just(idx).prop_shuffle())
        })
        .prop_map(|(g, idx)| LiteralLabel::Perm(Permutation::from_indices(g, idx).unwrap())),
        (1usize..4).prop_flat_map(|k| {
            let ground: Vec<i64> = (-(k as i64)..=-1).chain(1..=k as i64).collect();
            let idx: Vec<u32> = (0..2 * k as u32).collect();
            (Just(ground), Just(idx).prop_shuffle())
        })
        .prop_map(|(g, idx)| LiteralLabel::Perm(Permutation::from_indices(g, idx).unwrap())),
    ]
}

fn label() -> impl Strategy<Value = LiteralLabel> {
    (base_label(), 0u8..3).prop_map(|(l, tag)| match tag {
        0 => l,
        1 => LiteralLabel::Xi(Box::new(l)),
        _ => LiteralLabel::Eta(Box::new(l)),
    })
}

fn element() -> impl Strategy<Value = Vector<LiteralLabel>> {
    proptest::collection::vec((label(), scalar()), 0..6).prop_map(Vector::from_terms)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn print_parse_round_trip(v in element()) {
        let text = format_element(&v);
        let back = parse_element(&text).unwrap();
        prop_assert_eq!(&back, &v);
        prop_assert_eq!(format_element(&back), text);
    }
}

#[test]
fn documented_literals() {
    let v = parse_element("1*c4:1 + -1*c4:3").unwrap();
    assert_eq!(v.support_len(), 2);
    let w = parse_element("1/2+1/2i * xi:c3:0").unwrap();
    assert_eq!(
        w.coeff(&LiteralLabel::Xi(Box::new(LiteralLabel::Cyclic { modulus: 3, residue: 0 }))),
        Scalar::new(Rational::new(1, 2), Rational::new(1, 2))
    );
    let err = parse_element("1*zeta:c3:0").unwrap_err();
    assert_eq!(err.offset, 2);
}
