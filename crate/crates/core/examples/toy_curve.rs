//! Walks the 19-element toy group and exercises the point codec.
//!
//! ```bash
//! cargo run -p aka-core --example toy_curve
//! ```

use aka_core::CurveParams;

fn main() {
    let curve = CurveParams::toy();
    let g = curve.generator();
    println!(
        "y^2 = x^3 + {}x + {} over F_{}, G = {g}, q = {}",
        curve.a(),
        curve.b(),
        curve.p(),
        curve.order()
    );

    for k in 0..=19u32 {
        let pt = curve.base_mul(&curve.scalar(k));
        let enc = curve.encode_point(&pt);
        assert_eq!(curve.decode_point(&enc).unwrap(), pt);
        println!("{k:>2}G = {pt:<10} {}", hex::encode(&enc));
    }

    // (5,2) is not on the curve, so decoding it fails.
    let bogus = [0x04, 0x05, 0x02];
    println!("decode {} -> {:?}", hex::encode(bogus), curve.decode_point(&bogus));
}
