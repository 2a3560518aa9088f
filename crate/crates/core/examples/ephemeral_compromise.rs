//! The adversary learns one ephemeral secret y, replays the message it
//! belongs to, and computes the same session key as the victim.
//!
//! ```bash
//! cargo run -p aka-core --example ephemeral_compromise
//! ```

use aka_core::protocol::Variant;
use aka_core::sim::{Role, Scenario};

fn main() {
    for victim in [Role::Client, Role::Server] {
        for variant in Variant::ALL {
            let r = Scenario::new(11, variant)
                .with_victim(victim)
                .run_ephemeral_compromise();
            let hex = |k: Option<aka_core::SessionKey>| k.map(|k| k.to_hex()).unwrap_or_else(|| "-".into());
            println!("victim={victim:?} {variant}: keys_match={}", r.keys_match);
            println!("  attacker {}", hex(r.attacker_key));
            println!("  victim   {}", hex(r.victim_key));
            if let Some(reason) = r.outcome.reason() {
                println!("  defeated: {}", reason.name());
            }
        }
    }
}
