//! Flips the last byte of each wire field of a signed message and reports what
//! the receiver says, for both variants.
//!
//! ```bash
//! cargo run -p aka-core --example tamper_fields
//! ```

use aka_core::protocol::{
    decode_message, encode_message, field_spans, verify_message, Variant, WireField, DEFAULT_WINDOW,
};
use aka_core::sim::{seeded_message, tamper_field};
use aka_core::CurveParams;

fn main() {
    let curve = CurveParams::toy();
    for variant in Variant::ALL {
        let sm = seeded_message(&curve, 3, variant);
        let bytes = encode_message(&curve, &sm.message);
        println!("{variant}: {}", hex::encode(&bytes));
        let spans = field_spans(&bytes).unwrap();
        for field in WireField::ALL {
            let last = spans[field.index()].len() - 1;
            let tampered = tamper_field(&bytes, field, last, 0x01).unwrap();
            let verdict = decode_message(&curve, &tampered).and_then(|m| {
                // receiver clock follows the claimed time so freshness never decides
                verify_message(
                    &curve,
                    &m,
                    &sm.recipient,
                    &sm.master_public,
                    m.timestamp,
                    DEFAULT_WINDOW,
                    variant,
                )
            });
            let shown = match verdict {
                Ok(_) => "accepted".to_string(),
                Err(e) => format!("rejected ({})", e.name()),
            };
            println!("  {:<14} {shown}", field.name());
        }
    }
}
