//! Scripted two-party runs with an active network adversary.
//!
//! Every run is driven by a single seed and a logical clock, and records a
//! [`Transcript`] of what each actor did. The adversary sees only wire
//! bytes, plus the ephemeral secret it is explicitly handed in the
//! compromise scenario; it holds no reference to either party.

use std::fmt;

use rand_chacha::ChaCha20Rng;
use serde::ser::{Serialize, SerializeStruct, Serializer};
use thiserror::Error;

use crate::group::{CurveParams, Point};
use crate::ibs::{extract_key, pkg_setup, Identity};
use crate::protocol::wire::TIMESTAMP_FIELD_LEN;
use crate::protocol::{
    build_message, decode_message, derive_session_key, field_spans, verify_message, EphemeralSecret, PartyConfig,
    ProtocolError, ProtocolMessage, SessionKey, Timestamp, Variant, VerifiedPeer, WireField, DEFAULT_WINDOW,
};
use crate::rng::seeded;

pub const SERVER_ID: &str = "server-1";
pub const CLIENT_ID: &str = "sensor-7";

/// Clock reading at the start of every scripted run.
pub const START_TIME: Timestamp = Timestamp(1_000);

/// Default gap between interception and replay.
pub const DEFAULT_DELAY: u64 = 1_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SimError {
    #[error("byte {index} is outside the {field} field ({len} bytes)")]
    FieldOutOfRange {
        field: &'static str,
        index: usize,
        len: usize,
    },
    #[error(transparent)]
    Protocol(#[from] ProtocolError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Role {
    Server,
    Client,
}

impl Role {
    pub fn peer(self) -> Role {
        match self {
            Role::Server => Role::Client,
            Role::Client => Role::Server,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Actor {
    Server,
    Client,
    Adversary,
}

impl From<Role> for Actor {
    fn from(r: Role) -> Self {
        match r {
            Role::Server => Actor::Server,
            Role::Client => Actor::Client,
        }
    }
}

impl fmt::Display for Actor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Actor::Server => "SERVER",
            Actor::Client => "CLIENT",
            Actor::Adversary => "ADVERSARY",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Action {
    Send,
    Intercept,
    /// The adversary is handed the ephemeral secret of a captured message.
    CompromiseEphemeral,
    RewriteTimestamp,
    Replay,
    VerifyOk,
    VerifyFail(String),
    DeriveKey,
}

impl fmt::Display for Action {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Action::Send => f.write_str("SEND"),
            Action::Intercept => f.write_str("INTERCEPT"),
            Action::CompromiseEphemeral => f.write_str("COMPROMISE_EPHEMERAL"),
            Action::RewriteTimestamp => f.write_str("REWRITE_TIMESTAMP"),
            Action::Replay => f.write_str("REPLAY"),
            Action::VerifyOk => f.write_str("VERIFY_OK"),
            Action::VerifyFail(reason) => write!(f, "VERIFY_FAIL({reason})"),
            Action::DeriveKey => f.write_str("DERIVE_KEY"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TranscriptEvent {
    pub time: Timestamp,
    pub actor: Actor,
    pub action: Action,
    pub payload: Vec<u8>,
}

impl Serialize for TranscriptEvent {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("TranscriptEvent", 4)?;
        st.serialize_field("time", &self.time.0)?;
        st.serialize_field("actor", &self.actor.to_string())?;
        st.serialize_field("action", &self.action.to_string())?;
        st.serialize_field("payload_hex", &hex::encode(&self.payload))?;
        st.end()
    }
}

/// Append-only event log. Events must arrive in time order.
#[derive(Debug, Clone, Default, PartialEq, Eq, serde::Serialize)]
#[serde(transparent)]
pub struct Transcript {
    events: Vec<TranscriptEvent>,
}

impl Transcript {
    pub fn record(&mut self, time: Timestamp, actor: Actor, action: Action, payload: impl Into<Vec<u8>>) {
        if let Some(last) = self.events.last() {
            assert!(last.time <= time, "transcript events must be in time order");
        }
        self.events.push(TranscriptEvent {
            time,
            actor,
            action,
            payload: payload.into(),
        });
    }

    pub fn events(&self) -> &[TranscriptEvent] {
        &self.events
    }
}

/// Shared logical time. Only the script advances it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LogicalClock {
    now: Timestamp,
}

impl LogicalClock {
    pub fn starting_at(now: Timestamp) -> Self {
        LogicalClock { now }
    }

    pub fn now(&self) -> Timestamp {
        self.now
    }

    pub fn advance(&mut self, ticks: u64) {
        self.now = self.now.saturating_add(ticks);
    }
}

/// An honest participant: a role plus immutable configuration.
#[derive(Debug, Clone)]
pub struct Party {
    pub role: Role,
    pub config: PartyConfig,
}

impl Party {
    pub fn id(&self) -> &Identity {
        self.config.keys.id()
    }

    /// Builds a message to `peer` and returns its encoding and secret.
    pub fn send(
        &self,
        curve: &CurveParams,
        peer: &Identity,
        now: Timestamp,
        rng: &mut ChaCha20Rng,
    ) -> (Vec<u8>, EphemeralSecret) {
        let (msg, secret) = build_message(curve, &self.config.keys, peer, now, self.config.variant, rng);
        (crate::protocol::encode_message(curve, &msg), secret)
    }

    /// Decodes and verifies an incoming message at time `now`.
    pub fn receive(&self, curve: &CurveParams, bytes: &[u8], now: Timestamp) -> Result<VerifiedPeer, ProtocolError> {
        let msg = decode_message(curve, bytes)?;
        verify_message(
            curve,
            &msg,
            self.id(),
            &self.config.master_public,
            now,
            self.config.window,
            self.config.variant,
        )
    }

    /// Derives the session key, putting the server's identifier first.
    pub fn derive(
        &self,
        curve: &CurveParams,
        peer: &VerifiedPeer,
        own: EphemeralSecret,
    ) -> Result<SessionKey, ProtocolError> {
        let (server, client) = match self.role {
            Role::Server => (self.id(), &peer.peer),
            Role::Client => (&peer.peer, self.id()),
        };
        derive_session_key(curve, server, client, own, &peer.ephemeral)
    }
}

/// Man in the middle. Works on encodings only.
#[derive(Debug, Default)]
pub struct Adversary {
    captured: Option<Vec<u8>>,
    granted: Option<EphemeralSecret>,
}

impl Adversary {
    pub fn intercept(&mut self, bytes: &[u8]) {
        self.captured = Some(bytes.to_vec());
    }

    pub fn captured(&self) -> Option<&[u8]> {
        self.captured.as_deref()
    }

    pub fn grant_ephemeral(&mut self, secret: EphemeralSecret) {
        self.granted = Some(secret);
    }

    /// Overwrites the trailing 8-byte timestamp of the captured message.
    pub fn rewrite_timestamp(&mut self, now: Timestamp) -> Result<Vec<u8>, ProtocolError> {
        let bytes = self
            .captured
            .as_mut()
            .ok_or_else(|| ProtocolError::MalformedMessage("nothing captured".into()))?;
        rewrite_timestamp(bytes, now)?;
        Ok(bytes.clone())
    }

    /// Computes `H3(server || client || y * Y_peer)` from the granted `y`
    /// and the peer's response as seen on the wire.
    pub fn session_key(
        &self,
        curve: &CurveParams,
        own_role: Role,
        response: &[u8],
    ) -> Result<Option<SessionKey>, ProtocolError> {
        let (Some(captured), Some(secret)) = (&self.captured, &self.granted) else {
            return Ok(None);
        };
        let spoofed = wire_sender(captured)?;
        let response = decode_message(curve, response)?;
        let (server, client) = match own_role {
            Role::Server => (&spoofed, &response.sender),
            Role::Client => (&response.sender, &spoofed),
        };
        derive_session_key(curve, server, client, secret.clone(), &response.ephemeral).map(Some)
    }
}

fn wire_sender(bytes: &[u8]) -> Result<Identity, ProtocolError> {
    let spans = field_spans(bytes)?;
    Identity::new(&bytes[spans[WireField::SenderId.index()].clone()])
        .map_err(|e| ProtocolError::MalformedMessage(e.to_string()))
}

/// In-place surgery on the final length-prefixed field of an encoding.
pub fn rewrite_timestamp(bytes: &mut [u8], t: Timestamp) -> Result<(), ProtocolError> {
    let n = bytes.len();
    if n < 1 + TIMESTAMP_FIELD_LEN || bytes[n - TIMESTAMP_FIELD_LEN..n - 8] != [0x00, 0x08] {
        return Err(ProtocolError::MalformedMessage("no trailing timestamp field".into()));
    }
    bytes[n - 8..].copy_from_slice(&t.to_be_bytes());
    Ok(())
}

/// XORs `mask` into byte `index` of `field`'s value in an encoding.
pub fn tamper_field(bytes: &[u8], field: WireField, index: usize, mask: u8) -> Result<Vec<u8>, SimError> {
    let span = field_spans(bytes)?[field.index()].clone();
    if index >= span.len() {
        return Err(SimError::FieldOutOfRange {
            field: field.name(),
            index,
            len: span.len(),
        });
    }
    let mut out = bytes.to_vec();
    out[span.start + index] ^= mask;
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MessageOrder {
    ServerFirst,
    ClientFirst,
    Parallel,
}

impl MessageOrder {
    pub const ALL: [MessageOrder; 3] = [
        MessageOrder::ServerFirst,
        MessageOrder::ClientFirst,
        MessageOrder::Parallel,
    ];
}

impl fmt::Display for MessageOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MessageOrder::ServerFirst => "SERVER_FIRST",
            MessageOrder::ClientFirst => "CLIENT_FIRST",
            MessageOrder::Parallel => "PARALLEL",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AttackKind {
    Replay,
    EphemeralCompromise,
}

impl fmt::Display for AttackKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AttackKind::Replay => "REPLAY",
            AttackKind::EphemeralCompromise => "EPHEMERAL_COMPROMISE",
        })
    }
}

/// Why an attack failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DefeatReason {
    /// The victim rejected the replayed message at this check.
    Rejected(ProtocolError),
    /// The victim accepted, but the attacker's key differs from the victim's.
    KeyMismatch,
}

impl DefeatReason {
    pub fn name(&self) -> &'static str {
        match self {
            DefeatReason::Rejected(e) => e.name(),
            DefeatReason::KeyMismatch => "KeyMismatch",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Succeeded,
    Defeated(DefeatReason),
}

impl Outcome {
    pub fn succeeded(&self) -> bool {
        matches!(self, Outcome::Succeeded)
    }

    pub fn reason(&self) -> Option<&DefeatReason> {
        match self {
            Outcome::Succeeded => None,
            Outcome::Defeated(r) => Some(r),
        }
    }

    /// The protocol check that rejected the replay, if one did.
    pub fn rejected_by(&self) -> Option<&ProtocolError> {
        match self {
            Outcome::Defeated(DefeatReason::Rejected(e)) => Some(e),
            _ => None,
        }
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Outcome::Succeeded => f.write_str("SUCCEEDED"),
            Outcome::Defeated(_) => f.write_str("DEFEATED"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AttackReport {
    pub attack: AttackKind,
    pub variant: Variant,
    pub outcome: Outcome,
    pub attacker_key: Option<SessionKey>,
    pub victim_key: Option<SessionKey>,
    pub keys_match: bool,
    pub transcript: Transcript,
}

impl Serialize for AttackReport {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("AttackReport", 8)?;
        st.serialize_field("attack", &self.attack.to_string())?;
        st.serialize_field("variant", &self.variant.to_string())?;
        st.serialize_field("outcome", &self.outcome.to_string())?;
        st.serialize_field("reason", &self.outcome.reason().map(DefeatReason::name))?;
        st.serialize_field("keys_match", &self.keys_match)?;
        st.serialize_field("attacker_key_hex", &self.attacker_key.map(|k| k.to_hex()))?;
        st.serialize_field("victim_key_hex", &self.victim_key.map(|k| k.to_hex()))?;
        st.serialize_field("events", &self.transcript)?;
        st.end()
    }
}

impl AttackReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HonestReport {
    pub variant: Variant,
    pub order: MessageOrder,
    pub server_key: SessionKey,
    pub client_key: SessionKey,
    pub transcript: Transcript,
}

impl HonestReport {
    pub fn keys_match(&self) -> bool {
        self.server_key == self.client_key
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

impl Serialize for HonestReport {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("HonestReport", 7)?;
        st.serialize_field("exchange", "HONEST")?;
        st.serialize_field("variant", &self.variant.to_string())?;
        st.serialize_field("order", &self.order.to_string())?;
        st.serialize_field("keys_match", &self.keys_match())?;
        st.serialize_field("server_key_hex", &self.server_key.to_hex())?;
        st.serialize_field("client_key_hex", &self.client_key.to_hex())?;
        st.serialize_field("events", &self.transcript)?;
        st.end()
    }
}

/// Everything that parameterizes a scripted run.
#[derive(Debug, Clone)]
pub struct Scenario {
    pub curve: CurveParams,
    pub seed: u64,
    pub variant: Variant,
    pub window: u64,
    pub delay: u64,
    /// Whether the adversary refreshes the timestamp before replaying.
    pub rewrite_timestamp: bool,
    /// The party that receives the replayed message. `Client` replays a
    /// server message; `Server` runs the mirrored attack.
    pub victim: Role,
}

/// Per-actor randomness: one ChaCha stream each, all from the same seed.
const PKG_STREAM: u64 = 0;
const SERVER_STREAM: u64 = 1;
const CLIENT_STREAM: u64 = 2;

fn stream(seed: u64, stream: u64) -> ChaCha20Rng {
    let mut rng = seeded(seed);
    rng.set_stream(stream);
    rng
}

struct World {
    curve: CurveParams,
    server: Party,
    client: Party,
    server_rng: ChaCha20Rng,
    client_rng: ChaCha20Rng,
}

impl World {
    fn party(&self, role: Role) -> &Party {
        match role {
            Role::Server => &self.server,
            Role::Client => &self.client,
        }
    }

    fn rng(&mut self, role: Role) -> &mut ChaCha20Rng {
        match role {
            Role::Server => &mut self.server_rng,
            Role::Client => &mut self.client_rng,
        }
    }

    /// `role` sends to its peer; returns the encoding and its secret.
    fn send(&mut self, role: Role, now: Timestamp) -> (Vec<u8>, EphemeralSecret) {
        let peer_id = self.party(role.peer()).id().clone();
        let curve = self.curve.clone();
        let party = self.party(role).clone();
        party.send(&curve, &peer_id, now, self.rng(role))
    }
}

impl Scenario {
    /// Toy curve, default window and delay, timestamp rewriting on,
    /// server-to-client replay.
    pub fn new(seed: u64, variant: Variant) -> Self {
        Scenario {
            curve: CurveParams::toy(),
            seed,
            variant,
            window: DEFAULT_WINDOW,
            delay: DEFAULT_DELAY,
            rewrite_timestamp: true,
            victim: Role::Client,
        }
    }

    pub fn with_curve(mut self, curve: CurveParams) -> Self {
        self.curve = curve;
        self
    }

    pub fn with_window(mut self, window: u64) -> Self {
        self.window = window;
        self
    }

    pub fn with_delay(mut self, delay: u64) -> Self {
        self.delay = delay;
        self
    }

    pub fn with_rewrite(mut self, rewrite: bool) -> Self {
        self.rewrite_timestamp = rewrite;
        self
    }

    pub fn with_victim(mut self, victim: Role) -> Self {
        self.victim = victim;
        self
    }

    fn world(&self) -> World {
        let curve = self.curve.clone();
        let mut pkg_rng = stream(self.seed, PKG_STREAM);
        let master = pkg_setup(&curve, &mut pkg_rng);
        let mut party = |role, name: &str| {
            let id = Identity::new(name).expect("static identity is valid");
            Party {
                role,
                config: PartyConfig {
                    keys: extract_key(&curve, &master, &id, &mut pkg_rng),
                    master_public: master.public().clone(),
                    variant: self.variant,
                    window: self.window,
                },
            }
        };
        let server = party(Role::Server, SERVER_ID);
        let client = party(Role::Client, CLIENT_ID);
        World {
            curve,
            server,
            client,
            server_rng: stream(self.seed, SERVER_STREAM),
            client_rng: stream(self.seed, CLIENT_STREAM),
        }
    }

    /// Both parties run the protocol with no interference.
    pub fn run_honest(&self, order: MessageOrder) -> Result<HonestReport, ProtocolError> {
        let mut w = self.world();
        let mut clock = LogicalClock::starting_at(START_TIME);
        let mut log = Transcript::default();

        let accept = |w: &World, log: &mut Transcript, role: Role, bytes: &[u8], now| {
            let res = w.party(role).receive(&w.curve, bytes, now);
            match &res {
                Ok(peer) => log.record(now, role.into(), Action::VerifyOk, peer.peer.as_bytes()),
                Err(e) => log.record(now, role.into(), Action::VerifyFail(e.name().into()), Vec::new()),
            }
            res
        };

        let (first, second) = match order {
            MessageOrder::ServerFirst | MessageOrder::Parallel => (Role::Server, Role::Client),
            MessageOrder::ClientFirst => (Role::Client, Role::Server),
        };

        let (first_peer, first_secret, second_peer, second_secret);
        if order == MessageOrder::Parallel {
            let now = clock.now();
            let (b1, s1) = w.send(first, now);
            log.record(now, first.into(), Action::Send, b1.clone());
            let (b2, s2) = w.send(second, now);
            log.record(now, second.into(), Action::Send, b2.clone());
            clock.advance(1);
            let now = clock.now();
            second_peer = accept(&w, &mut log, second, &b1, now)?;
            first_peer = accept(&w, &mut log, first, &b2, now)?;
            (first_secret, second_secret) = (s1, s2);
        } else {
            let now = clock.now();
            let (b1, s1) = w.send(first, now);
            log.record(now, first.into(), Action::Send, b1.clone());
            clock.advance(1);
            let now = clock.now();
            second_peer = accept(&w, &mut log, second, &b1, now)?;
            let (b2, s2) = w.send(second, now);
            log.record(now, second.into(), Action::Send, b2.clone());
            clock.advance(1);
            let now = clock.now();
            first_peer = accept(&w, &mut log, first, &b2, now)?;
            (first_secret, second_secret) = (s1, s2);
        }

        let now = clock.now();
        let k_second = w.party(second).derive(&w.curve, &second_peer, second_secret)?;
        log.record(now, second.into(), Action::DeriveKey, k_second.as_bytes().to_vec());
        let k_first = w.party(first).derive(&w.curve, &first_peer, first_secret)?;
        log.record(now, first.into(), Action::DeriveKey, k_first.as_bytes().to_vec());

        let (server_key, client_key) = match first {
            Role::Server => (k_first, k_second),
            Role::Client => (k_second, k_first),
        };
        Ok(HonestReport {
            variant: self.variant,
            order,
            server_key,
            client_key,
            transcript: log,
        })
    }

    /// Captures one message, waits `delay` ticks, optionally refreshes its
    /// timestamp and replays it to a fresh session of the victim.
    pub fn run_replay(&self) -> AttackReport {
        self.run_attack(AttackKind::Replay)
    }

    /// As [`Scenario::run_replay`], with the adversary also holding the
    /// captured message's ephemeral secret.
    pub fn run_ephemeral_compromise(&self) -> AttackReport {
        self.run_attack(AttackKind::EphemeralCompromise)
    }

    fn run_attack(&self, attack: AttackKind) -> AttackReport {
        let mut w = self.world();
        let mut clock = LogicalClock::starting_at(START_TIME);
        let mut log = Transcript::default();
        let mut adv = Adversary::default();
        let victim = self.victim;
        let spoofed = victim.peer();

        // Genuine message, captured before it reaches the victim.
        let now = clock.now();
        let (genuine, secret) = w.send(spoofed, now);
        log.record(now, spoofed.into(), Action::Send, genuine.clone());
        adv.intercept(&genuine);
        log.record(now, Actor::Adversary, Action::Intercept, genuine);
        if attack == AttackKind::EphemeralCompromise {
            log.record(
                now,
                Actor::Adversary,
                Action::CompromiseEphemeral,
                w.curve.scalar_to_be_bytes(secret.scalar()),
            );
            adv.grant_ephemeral(secret);
        }

        clock.advance(self.delay);
        let now = clock.now();
        let replayed = if self.rewrite_timestamp {
            let b = adv
                .rewrite_timestamp(now)
                .expect("captured message has a timestamp field");
            log.record(now, Actor::Adversary, Action::RewriteTimestamp, b.clone());
            b
        } else {
            adv.captured().expect("message captured").to_vec()
        };
        log.record(now, Actor::Adversary, Action::Replay, replayed.clone());

        let verdict = w.party(victim).receive(&w.curve, &replayed, now);
        let peer = match verdict {
            Ok(peer) => {
                log.record(now, victim.into(), Action::VerifyOk, peer.peer.as_bytes());
                peer
            }
            Err(e) => {
                log.record(now, victim.into(), Action::VerifyFail(e.name().into()), Vec::new());
                return AttackReport {
                    attack,
                    variant: self.variant,
                    outcome: Outcome::Defeated(DefeatReason::Rejected(e)),
                    attacker_key: None,
                    victim_key: None,
                    keys_match: false,
                    transcript: log,
                };
            }
        };

        // The victim answers and completes its side of the session.
        let (response, own) = w.send(victim, now);
        log.record(now, victim.into(), Action::Send, response.clone());
        log.record(now, Actor::Adversary, Action::Intercept, response.clone());
        let victim_key = w.party(victim).derive(&w.curve, &peer, own).ok();
        if let Some(k) = victim_key {
            log.record(now, victim.into(), Action::DeriveKey, k.as_bytes().to_vec());
        }

        let attacker_key = adv.session_key(&w.curve, spoofed, &response).ok().flatten();
        if let Some(k) = attacker_key {
            log.record(now, Actor::Adversary, Action::DeriveKey, k.as_bytes().to_vec());
        }

        let keys_match = matches!((attacker_key, victim_key), (Some(a), Some(v)) if a == v);
        let outcome = match attack {
            AttackKind::Replay => Outcome::Succeeded,
            AttackKind::EphemeralCompromise if keys_match => Outcome::Succeeded,
            AttackKind::EphemeralCompromise => Outcome::Defeated(DefeatReason::KeyMismatch),
        };
        AttackReport {
            attack,
            variant: self.variant,
            outcome,
            attacker_key,
            victim_key,
            keys_match,
            transcript: log,
        }
    }
}

/// Honest exchange on the toy curve with default settings.
pub fn run_honest_exchange(seed: u64, variant: Variant, order: MessageOrder) -> Result<HonestReport, ProtocolError> {
    Scenario::new(seed, variant).run_honest(order)
}

/// Server-to-client replay on the toy curve, timestamp rewritten.
pub fn run_replay_attack(seed: u64, variant: Variant, delay: u64) -> AttackReport {
    Scenario::new(seed, variant).with_delay(delay).run_replay()
}

/// Replay plus leaked ephemeral secret on the toy curve.
pub fn run_ephemeral_compromise_attack(seed: u64, variant: Variant, delay: u64) -> AttackReport {
    Scenario::new(seed, variant)
        .with_delay(delay)
        .run_ephemeral_compromise()
}

/// Server-to-client message built from `seed` alone: PKG setup, extraction
/// for both parties, then one build at [`START_TIME`], all from one
/// ChaCha stream. Used for golden vectors and codec sweeps.
pub fn seeded_message(curve: &CurveParams, seed: u64, variant: Variant) -> SeededMessage {
    let mut rng = seeded(seed);
    let master = pkg_setup(curve, &mut rng);
    let server = extract_key(curve, &master, &Identity::new(SERVER_ID).expect("valid"), &mut rng);
    let client = extract_key(curve, &master, &Identity::new(CLIENT_ID).expect("valid"), &mut rng);
    let (message, _) = build_message(curve, &server, client.id(), START_TIME, variant, &mut rng);
    SeededMessage {
        master_public: master.public().clone(),
        recipient: client.id().clone(),
        message,
    }
}

/// A message plus the public context needed to verify it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeededMessage {
    pub master_public: Point,
    pub recipient: Identity,
    pub message: ProtocolMessage,
}
