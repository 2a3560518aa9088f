//! An honest server/client exchange in each message order.
//!
//! ```bash
//! cargo run -p aka-core --example honest_exchange
//! ```

use aka_core::protocol::Variant;
use aka_core::sim::{run_honest_exchange, MessageOrder};

fn main() {
    for variant in Variant::ALL {
        for order in MessageOrder::ALL {
            let r = run_honest_exchange(5, variant, order).expect("honest exchange succeeds");
            println!(
                "{variant:<6} {order:<13} keys_match={} key={}",
                r.keys_match(),
                r.server_key.to_hex()
            );
        }
    }

    let r = run_honest_exchange(5, Variant::Fixed, MessageOrder::Parallel).unwrap();
    println!("{}", r.to_json());
}
