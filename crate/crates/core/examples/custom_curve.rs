//! Loads curve parameter files and shows validation errors for broken ones.
//!
//! ```bash
//! cargo run -p aka-core --example custom_curve
//! cargo run -p aka-core --example custom_curve -- path/to/my.params
//! ```

use aka_core::{CurveParams, RawCurveParams};

fn show(name: &str, text: &str) {
    match text.parse::<CurveParams>() {
        Ok(c) => println!(
            "{name}: ok, {}-byte coordinates, {}-byte scalars",
            c.field_width(),
            c.scalar_width()
        ),
        Err(e) => println!("{name}: rejected: {e}"),
    }
}

fn main() {
    if let Some(path) = std::env::args().nth(1) {
        let text = std::fs::read_to_string(&path).expect("readable curve file");
        show(&path, &text);
        return;
    }

    show("p65521", include_str!("curves/p65521.params"));
    show("secp256k1", include_str!("curves/secp256k1.params"));

    let broken = [
        (
            "composite p",
            RawCurveParams {
                p: 16u32.into(),
                ..RawCurveParams::toy()
            },
        ),
        (
            "singular",
            RawCurveParams {
                a: 0u32.into(),
                b: 0u32.into(),
                ..RawCurveParams::toy()
            },
        ),
        (
            "generator off curve",
            RawCurveParams {
                gy: 2u32.into(),
                ..RawCurveParams::toy()
            },
        ),
        (
            "wrong order",
            RawCurveParams {
                q: 17u32.into(),
                ..RawCurveParams::toy()
            },
        ),
    ];
    for (name, raw) in broken {
        show(name, &raw.to_file_string());
    }
}
