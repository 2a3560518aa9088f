//! Prints the golden wire vectors checked into `tests/golden/messages.hex`.
//!
//! ```bash
//! cargo run -p aka-core --example golden_vectors > crates/core/tests/golden/messages.hex
//! ```
//!
//! Only regenerate after a deliberate wire-format change.

use aka_core::protocol::{encode_message, Variant};
use aka_core::sim::seeded_message;
use aka_core::CurveParams;

fn main() {
    let secp256k1: CurveParams = include_str!("curves/secp256k1.params")
        .parse()
        .expect("bundled curve is valid");
    let curves = [("toy", CurveParams::toy(), 1..=8u64), ("secp256k1", secp256k1, 1..=2)];

    println!("# curve variant seed message_hex");
    for (name, curve, seeds) in curves {
        for variant in Variant::ALL {
            for seed in seeds.clone() {
                let msg = seeded_message(&curve, seed, variant).message;
                println!("{name} {variant} {seed} {}", hex::encode(encode_message(&curve, &msg)));
            }
        }
    }
}
