//! Replays a captured server message with a rewritten timestamp. The
//! published form accepts it, the fixed form rejects it. Without the
//! rewrite both reject the stale message.
//!
//! ```bash
//! cargo run -p aka-core --example replay_attack
//! ```

use aka_core::protocol::Variant;
use aka_core::sim::Scenario;

fn main() {
    for variant in Variant::ALL {
        for rewrite in [true, false] {
            let r = Scenario::new(7, variant).with_rewrite(rewrite).run_replay();
            let reason = r.outcome.reason().map(|d| d.name()).unwrap_or("-");
            let verdict = if r.outcome.succeeded() { "SUCCEEDED" } else { "DEFEATED" };
            println!("{variant:<6} rewrite={rewrite:<5} -> {verdict} ({reason})");
        }
    }

    println!("{}", Scenario::new(7, Variant::Flawed).run_replay().to_json());
}
