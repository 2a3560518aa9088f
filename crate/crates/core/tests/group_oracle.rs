mod common;

use aka_core::group::{CurveParams, GroupError, Point, RawCurveParams};
use common::oracle::{self, OPoint};
use num_bigint::BigUint;
use proptest::prelude::*;
use std::sync::LazyLock;

fn to_lib(u: OPoint) -> Point {
    match u {
        None => Point::Identity,
        Some((x, y)) => Point::affine(x as u32, y as u32),
    }
}

fn curve_file(name: &str) -> String {
    let path = format!("{}/examples/curves/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(path).unwrap()
}

#[test]
fn enumeration_counts_nineteen_points() {
    let pts = oracle::enumerate();
    assert_eq!(pts.len(), 19);
    // the generator reaches every point
    let mut seen: Vec<OPoint> = (0..19).map(|k| oracle::repeat(k, Some(oracle::GEN))).collect();
    seen.sort();
    let mut all = pts.clone();
    all.sort();
    assert_eq!(seen, all);
    assert!(CurveParams::validate(RawCurveParams::toy()).is_ok());
}

#[test]
fn addition_table_matches_oracle() {
    let c = CurveParams::toy();
    let pts = oracle::enumerate();
    for &u in &pts {
        assert!(c.is_on_curve(&to_lib(u)));
        for &v in &pts {
            assert_eq!(
                c.add(&to_lib(u), &to_lib(v)),
                to_lib(oracle::add(u, v)),
                "{u:?} + {v:?}"
            );
        }
    }
    // read the doubling of the generator off the table
    assert_eq!(oracle::add(Some((5, 1)), Some((5, 1))), Some((6, 3)));
}

#[test]
fn group_laws_exhaustive() {
    let c = CurveParams::toy();
    let pts: Vec<Point> = oracle::enumerate().into_iter().map(to_lib).collect();
    for u in &pts {
        assert_eq!(c.add(u, &c.negate(u)), Point::Identity);
        for v in &pts {
            assert_eq!(c.add(u, v), c.add(v, u));
            for w in &pts {
                assert_eq!(c.add(&c.add(u, v), w), c.add(u, &c.add(v, w)));
            }
        }
    }
}

#[test]
fn scalar_mul_matches_repeated_addition() {
    let c = CurveParams::toy();
    for u in oracle::enumerate() {
        for k in 0..38usize {
            let expected = to_lib(oracle::repeat(k, u));
            assert_eq!(c.scalar_mul_point(&c.scalar(k as u32), &to_lib(u)), expected);
            assert_eq!(c.mul_uint(&BigUint::from(k), &to_lib(u)), expected);
        }
    }
    let g = c.generator();
    assert_eq!(c.mul_uint(c.order(), g), Point::Identity);
    assert_eq!(c.base_mul(&c.scalar(18u32)), c.negate(g));
}

#[test]
fn point_codec_round_trip_all_points() {
    let c = CurveParams::toy();
    for u in oracle::enumerate().into_iter().map(to_lib) {
        let enc = c.encode_point(&u);
        assert_eq!(enc.len(), if u.is_identity() { 1 } else { 3 });
        assert_eq!(c.decode_point(&enc), Ok(u));
    }
}

#[test]
fn off_curve_encodings_rejected() {
    let c = CurveParams::toy();
    let on: Vec<OPoint> = oracle::enumerate();
    for x in 0..17u8 {
        for y in 0..17u8 {
            let r = c.decode_point(&[0x04, x, y]);
            if on.contains(&Some((x as i64, y as i64))) {
                assert!(r.is_ok());
            } else {
                assert_eq!(r, Err(GroupError::PointNotOnCurve));
            }
        }
    }
}

#[test]
fn bundled_curve_files_validate() {
    let small: CurveParams = curve_file("p65521.params").parse().unwrap();
    assert_eq!(small.order(), &BigUint::from(65029u32));
    assert_eq!(small.field_width(), 2);

    let k1: CurveParams = curve_file("secp256k1.params").parse().unwrap();
    assert_eq!(k1.field_width(), 32);
    assert_eq!(k1.scalar_width(), 32);
    assert_eq!(k1.to_raw().to_file_string().parse::<CurveParams>().unwrap(), k1);
}

#[test]
fn corrupted_large_curve_rejected() {
    let text = curve_file("secp256k1.params");
    let mut raw: RawCurveParams = text.parse().unwrap();
    raw.q -= 2u32;
    assert!(matches!(
        CurveParams::validate(raw),
        Err(GroupError::NonPrimeOrder | GroupError::WrongOrder)
    ));

    let mut raw: RawCurveParams = text.parse().unwrap();
    raw.gy += 1u32;
    assert_eq!(CurveParams::validate(raw), Err(GroupError::GeneratorNotOnCurve));

    // prime q that is not the generator's order
    let mut raw: RawCurveParams = curve_file("p65521.params").parse().unwrap();
    raw.q = 65027u32.into();
    assert_eq!(CurveParams::validate(raw), Err(GroupError::WrongOrder));
}

static SECP256K1: LazyLock<CurveParams> = LazyLock::new(|| curve_file("secp256k1.params").parse().unwrap());

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn secp256k1_scalar_mul_is_linear(a in any::<[u8; 32]>(), b in any::<[u8; 32]>()) {
        let c = &*SECP256K1;
        let (a, b) = (c.scalar_from_be_bytes(&a), c.scalar_from_be_bytes(&b));
        let lhs = c.base_mul(&c.scalar_add(&a, &b));
        let rhs = c.add(&c.base_mul(&a), &c.base_mul(&b));
        prop_assert!(c.is_on_curve(&lhs));
        prop_assert_eq!(&lhs, &rhs);
        prop_assert_eq!(c.decode_point(&c.encode_point(&lhs)), Ok(lhs));
    }
}
