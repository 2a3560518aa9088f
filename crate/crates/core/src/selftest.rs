//! Quick invariant sweeps, runnable from the command line.

use crate::group::{CurveParams, Point};
use crate::ibs::{self, extract_key, pkg_setup, Identity, SignedFields};
use crate::protocol::{build_message, decode_message, encode_message, Timestamp, Variant};
use crate::rng::seeded;
use crate::sim::{MessageOrder, Scenario};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl CheckResult {
    fn new(name: &'static str, failures: usize, trials: usize) -> Self {
        CheckResult {
            name,
            passed: failures == 0,
            detail: format!("{}/{} ok", trials - failures, trials),
        }
    }
}

/// Runs every sweep with `seeds` seeds per scenario on `curve`. The group
/// law sweep always uses the toy curve, since it enumerates the group.
pub fn run_all(curve: &CurveParams, seeds: u64) -> Vec<CheckResult> {
    vec![
        group_laws(),
        signature_round_trip(curve, seeds),
        honest_agreement(curve, seeds),
        attack_matrix(curve, seeds),
        codec(curve, seeds),
    ]
}

fn toy_points(curve: &CurveParams) -> Vec<Point> {
    let g = curve.generator();
    let mut pts = vec![Point::Identity];
    let mut acc = g.clone();
    while !acc.is_identity() {
        pts.push(acc.clone());
        acc = curve.add(&acc, g);
    }
    pts
}

fn group_laws() -> CheckResult {
    let c = CurveParams::toy();
    let pts = toy_points(&c);
    let mut fails = 0;
    let mut trials = 0;
    for u in &pts {
        for v in &pts {
            trials += 1;
            if c.add(u, v) != c.add(v, u) {
                fails += 1;
            }
            for w in &pts {
                trials += 1;
                if c.add(&c.add(u, v), w) != c.add(u, &c.add(v, w)) {
                    fails += 1;
                }
            }
        }
    }
    CheckResult::new("group laws (toy curve)", fails, trials)
}

fn signature_round_trip(curve: &CurveParams, seeds: u64) -> CheckResult {
    let mut fails = 0;
    let mut trials = 0;
    let bob = Identity::new("sensor-7").expect("valid");
    for variant in Variant::ALL {
        for seed in 0..seeds {
            let mut rng = seeded(seed);
            let master = pkg_setup(curve, &mut rng);
            let alice = extract_key(curve, &master, &Identity::new("server-1").expect("valid"), &mut rng);
            let y = curve.base_mul(&curve.random_nonzero_scalar(&mut rng));
            let fields = SignedFields {
                sender: alice.id(),
                recipient: &bob,
                ephemeral: &y,
                timestamp: Timestamp(seed),
            };
            let (sig, x) = ibs::sign(curve, &alice, &fields, variant, &mut rng);
            trials += 1;
            if !ibs::verify_signature(curve, &sig, &fields, master.public(), variant)
                || ibs::recover_commitment(curve, &sig, alice.id(), master.public()) != x
            {
                fails += 1;
            }
        }
    }
    CheckResult::new("signature round trip", fails, trials)
}

fn honest_agreement(curve: &CurveParams, seeds: u64) -> CheckResult {
    let mut fails = 0;
    let mut trials = 0;
    for variant in Variant::ALL {
        for order in MessageOrder::ALL {
            for seed in 0..seeds {
                trials += 1;
                let ok = Scenario::new(seed, variant)
                    .with_curve(curve.clone())
                    .run_honest(order)
                    .map(|r| r.keys_match())
                    .unwrap_or(false);
                if !ok {
                    fails += 1;
                }
            }
        }
    }
    CheckResult::new("honest key agreement", fails, trials)
}

fn attack_matrix(curve: &CurveParams, seeds: u64) -> CheckResult {
    let mut fails = 0;
    let mut trials = 0;
    for variant in Variant::ALL {
        for seed in 0..seeds {
            let s = Scenario::new(seed, variant).with_curve(curve.clone());
            let flawed = variant == Variant::Flawed;
            trials += 2;
            if s.run_replay().outcome.succeeded() != flawed {
                fails += 1;
            }
            if s.run_ephemeral_compromise().keys_match != flawed {
                fails += 1;
            }
        }
    }
    CheckResult::new("attack outcome matrix", fails, trials)
}

fn codec(curve: &CurveParams, seeds: u64) -> CheckResult {
    let mut fails = 0;
    let mut trials = 0;
    let peer = Identity::new("sensor-7").expect("valid");
    for seed in 0..seeds {
        let mut rng = seeded(seed);
        let master = pkg_setup(curve, &mut rng);
        let keys = extract_key(curve, &master, &Identity::new("server-1").expect("valid"), &mut rng);
        let (msg, _) = build_message(curve, &keys, &peer, Timestamp(seed), Variant::Fixed, &mut rng);
        let bytes = encode_message(curve, &msg);
        trials += 1;
        if decode_message(curve, &bytes).as_ref() != Ok(&msg) {
            fails += 1;
        }
        trials += 1;
        if decode_message(curve, &bytes[..bytes.len() - 1]).is_ok() {
            fails += 1;
        }
    }
    CheckResult::new("wire codec", fails, trials)
}
