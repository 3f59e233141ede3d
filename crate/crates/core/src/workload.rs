//! Built-in instances, seeded random workloads and the request file format.
//!
//! Request files are UTF-8 text. Tracks are non-negative integers separated
//! by commas and/or whitespace, across any number of lines. `#` starts a
//! comment that runs to the end of the line. The first non-blank line may be
//! a `head <track>` directive giving the initial head position:
//!
//! ```text
//! # nightly batch
//! head 45
//! 25, 10, 151, 170
//! 62 46 74 111
//! ```
//!
//! Random workloads are drawn with ChaCha8 (`rand_chacha` 0.3) seeded via
//! `seed_from_u64`, using `rand` 0.8 uniform integer sampling. Outputs are
//! stable for a given seed as long as those two crate versions are kept.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::model::{DiskGeometry, HeadState, Instance, RequestQueue, Track};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WorkloadError {
    #[error("unknown case {0}; expected 1, 2 or 3")]
    UnknownCase(u8),
    #[error("workload count must be at least 1")]
    ZeroCount,
    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// The three reference instances, all on the default 0..=180 geometry.
pub fn paper_case(id: u8) -> Result<Instance, WorkloadError> {
    let (requests, head): (&[u32], u32) = match id {
        1 => (&[25, 10, 151, 170, 62, 46, 74, 111], 45),
        2 => (&[16, 75, 24, 21, 30, 80, 116, 63], 66),
        3 => (&[25, 33, 54, 64, 40, 90, 110, 160], 125),
        other => return Err(WorkloadError::UnknownCase(other)),
    };
    Ok(Instance {
        queue: RequestQueue::from_values(requests.iter().copied()),
        head: HeadState::at(head),
        geometry: DiskGeometry::default(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Distribution {
    #[default]
    Uniform,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct WorkloadSpec {
    count: usize,
    geometry: DiskGeometry,
    seed: u64,
    distribution: Distribution,
}

impl WorkloadSpec {
    pub fn new(count: usize, geometry: DiskGeometry, seed: u64) -> Result<Self, WorkloadError> {
        if count == 0 {
            return Err(WorkloadError::ZeroCount);
        }
        Ok(WorkloadSpec {
            count,
            geometry,
            seed,
            distribution: Distribution::Uniform,
        })
    }

    pub fn count(&self) -> usize {
        self.count
    }

    pub fn geometry(&self) -> DiskGeometry {
        self.geometry
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn distribution(&self) -> Distribution {
        self.distribution
    }
}

pub fn generate(spec: &WorkloadSpec) -> RequestQueue {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    random_queue(&mut rng, spec.count, spec.geometry)
}

pub fn random_track<R: Rng>(rng: &mut R, geometry: DiskGeometry) -> Track {
    Track(rng.gen_range(geometry.min_track.value()..=geometry.max_track.value()))
}

pub fn random_queue<R: Rng>(rng: &mut R, count: usize, geometry: DiskGeometry) -> RequestQueue {
    (0..count).map(|_| random_track(rng, geometry)).collect()
}

/// Random instance with `1..=max_n` requests and a uniform head position.
pub fn random_instance<R: Rng>(rng: &mut R, max_n: usize, geometry: DiskGeometry) -> Instance {
    let n = rng.gen_range(1..=max_n.max(1));
    let head = HeadState {
        position: random_track(rng, geometry),
    };
    let queue = random_queue(rng, n, geometry);
    Instance {
        queue,
        head,
        geometry,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParseErrorKind {
    NegativeTrack,
    NonInteger,
    Overflow,
    /// `head` directive after the first content line, repeated, or missing its value.
    MisplacedHead,
}

/// Malformed request text. `line` and `column` are 1-based; `token` is the
/// 1-based position of the offending token among all tokens in the input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column} (token {token}): {message} `{text}`")]
pub struct ParseError {
    pub kind: ParseErrorKind,
    pub line: usize,
    pub column: usize,
    pub token: usize,
    pub text: String,
    message: &'static str,
}

impl ParseError {
    fn new(kind: ParseErrorKind, line: usize, column: usize, token: usize, text: &str) -> Self {
        let message = match kind {
            ParseErrorKind::NegativeTrack => "negative track",
            ParseErrorKind::NonInteger => "not an integer track",
            ParseErrorKind::Overflow => "track number too large",
            ParseErrorKind::MisplacedHead => "misplaced head directive",
        };
        ParseError {
            kind,
            line,
            column,
            token,
            text: text.to_string(),
            message,
        }
    }
}

/// Splits a line into (1-based column, token) pairs.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let is_sep = |c: char| c == ',' || c.is_whitespace();
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices() {
        if is_sep(c) {
            if let Some(s) = start.take() {
                out.push((s, &line[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((s, &line[s..]));
    }
    out.into_iter()
        .map(|(s, tok)| (line[..s].chars().count() + 1, tok))
        .collect()
}

fn parse_track(text: &str, line: usize, column: usize, token: usize) -> Result<Track, ParseError> {
    if let Ok(v) = text.parse::<u32>() {
        return Ok(Track(v));
    }
    let err = |kind| ParseError::new(kind, line, column, token, text);
    let digits = |s: &str| !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit());
    if let Some(rest) = text.strip_prefix('-') {
        if digits(rest) {
            return Err(err(ParseErrorKind::NegativeTrack));
        }
    }
    let unsigned = text.strip_prefix('+').unwrap_or(text);
    if digits(unsigned) {
        return Err(err(ParseErrorKind::Overflow));
    }
    Err(err(ParseErrorKind::NonInteger))
}

/// Parses request text into a queue and an optional head position.
pub fn parse_requests(text: &str) -> Result<(RequestQueue, Option<HeadState>), ParseError> {
    let mut requests = Vec::new();
    let mut head = None;
    let mut seen_content = false;
    let mut token_no = 0usize;

    for (line_idx, raw) in text.lines().enumerate() {
        let line_no = line_idx + 1;
        let line = raw.split('#').next().unwrap_or("");
        let mut toks = tokens(line).into_iter().peekable();
        let Some(&(col, first)) = toks.peek() else {
            continue;
        };
        if first.eq_ignore_ascii_case("head") {
            token_no += 1;
            if seen_content {
                return Err(ParseError::new(
                    ParseErrorKind::MisplacedHead,
                    line_no,
                    col,
                    token_no,
                    first,
                ));
            }
            toks.next();
            let Some((vcol, value)) = toks.next() else {
                return Err(ParseError::new(
                    ParseErrorKind::MisplacedHead,
                    line_no,
                    col,
                    token_no,
                    first,
                ));
            };
            token_no += 1;
            head = Some(HeadState {
                position: parse_track(value, line_no, vcol, token_no)?,
            });
        }
        seen_content = true;
        for (col, tok) in toks {
            token_no += 1;
            if tok.eq_ignore_ascii_case("head") {
                return Err(ParseError::new(
                    ParseErrorKind::MisplacedHead,
                    line_no,
                    col,
                    token_no,
                    tok,
                ));
            }
            requests.push(parse_track(tok, line_no, col, token_no)?);
        }
    }
    Ok((RequestQueue::new(requests), head))
}

/// Canonical text form accepted by [`parse_requests`].
pub fn render_requests(queue: &RequestQueue, head: Option<HeadState>) -> String {
    let mut out = String::new();
    if let Some(h) = head {
        out.push_str(&format!("head {}\n", h.position));
    }
    let list: Vec<String> = queue.iter().map(|t| t.to_string()).collect();
    out.push_str(&list.join(","));
    out.push('\n');
    out
}
