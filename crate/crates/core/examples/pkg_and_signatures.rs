//! PKG setup, key extraction and the identity-based signature under both
//! variants, including what happens when the timestamp is changed.
//!
//! ```bash
//! cargo run -p aka-core --example pkg_and_signatures
//! ```

use aka_core::ibs::{extract_key, pkg_setup, recover_commitment, sign, verify_signature, Identity, SignedFields};
use aka_core::protocol::{Timestamp, Variant};
use aka_core::rng::seeded;
use aka_core::CurveParams;

fn main() {
    let curve: CurveParams = include_str!("curves/secp256k1.params").parse().unwrap();
    let mut rng = seeded(42);
    let master = pkg_setup(&curve, &mut rng);
    let server = extract_key(&curve, &master, &Identity::new("server-1").unwrap(), &mut rng);
    let client = Identity::new("sensor-7").unwrap();
    println!("P_pkg = {}", master.public());
    println!("R     = {}", server.public());
    println!("key consistent: {}", server.is_consistent(&curve, master.public()));

    let y = curve.base_mul(&curve.random_nonzero_scalar(&mut rng));
    for variant in Variant::ALL {
        let fields = SignedFields {
            sender: server.id(),
            recipient: &client,
            ephemeral: &y,
            timestamp: Timestamp(1000),
        };
        let (sig, x) = sign(&curve, &server, &fields, variant, &mut rng);
        let recovered = recover_commitment(&curve, &sig, server.id(), master.public());
        let moved = SignedFields {
            timestamp: Timestamp(2000),
            ..fields
        };
        println!("{variant}:");
        println!("  h = {}", sig.h.to_hex());
        println!("  X' == X: {}", recovered == x);
        println!(
            "  verifies at t=1000: {}",
            verify_signature(&curve, &sig, &fields, master.public(), variant)
        );
        println!(
            "  verifies at t=2000: {}",
            verify_signature(&curve, &sig, &moved, master.public(), variant)
        );
    }
}
