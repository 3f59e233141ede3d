//! Disk-arm scheduling policies.
//!
//! Each policy is a pure function from a validated instance to a
//! [`Schedule`]: the full head path, including moves that service nothing
//! (SCAN end sweeps, the C-SCAN wrap), with one seek distance per move.

mod fifo;
mod odsa;
mod optimal;
mod sstf;
mod sweep;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::model::{Instance, Track};

pub use fifo::schedule_fifo;
pub use odsa::{odsa_plan, schedule_odsa, OdsaPlan, SweepStart};
pub use optimal::{brute_force_optimal, BRUTE_FORCE_LIMIT};
pub use sstf::schedule_sstf;
pub use sweep::{schedule_cscan, schedule_look, schedule_scan, sweep_direction, Direction};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Algorithm {
    #[serde(rename = "FIFO")]
    Fifo,
    #[serde(rename = "SSTF")]
    Sstf,
    #[serde(rename = "SCAN")]
    Scan,
    #[serde(rename = "C-SCAN")]
    CScan,
    #[serde(rename = "LOOK")]
    Look,
    #[serde(rename = "ODSA")]
    Odsa,
    /// Exhaustive search over service orders; only for small queues.
    #[serde(rename = "OPTIMAL")]
    Optimal,
}

impl Algorithm {
    /// The six policies compared in a standard report, in report order.
    pub const BASELINES_AND_ODSA: [Algorithm; 6] = [
        Algorithm::Fifo,
        Algorithm::Sstf,
        Algorithm::Scan,
        Algorithm::CScan,
        Algorithm::Look,
        Algorithm::Odsa,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Fifo => "FIFO",
            Algorithm::Sstf => "SSTF",
            Algorithm::Scan => "SCAN",
            Algorithm::CScan => "C-SCAN",
            Algorithm::Look => "LOOK",
            Algorithm::Odsa => "ODSA",
            Algorithm::Optimal => "OPTIMAL",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = ScheduleError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "fifo" | "fcfs" => Ok(Algorithm::Fifo),
            "sstf" => Ok(Algorithm::Sstf),
            "scan" => Ok(Algorithm::Scan),
            "cscan" | "c-scan" => Ok(Algorithm::CScan),
            "look" => Ok(Algorithm::Look),
            "odsa" => Ok(Algorithm::Odsa),
            "optimal" => Ok(Algorithm::Optimal),
            _ => Err(ScheduleError::UnknownAlgorithm(s.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScheduleError {
    #[error("brute-force search limited to {limit} requests, got {n}")]
    TooLarge { n: usize, limit: usize },
    #[error("unknown algorithm `{0}`")]
    UnknownAlgorithm(String),
}

/// One leg of the head path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct HeadMove {
    /// Where the head ends up.
    pub track: Track,
    /// Tracks crossed to get there.
    pub seek: u64,
    /// Arrival index of the request serviced on arrival, if any.
    pub request: Option<usize>,
}

impl HeadMove {
    pub fn is_service(&self) -> bool {
        self.request.is_some()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Schedule {
    algorithm: Algorithm,
    start: Track,
    moves: Vec<HeadMove>,
}

impl Schedule {
    pub fn algorithm(&self) -> Algorithm {
        self.algorithm
    }

    /// Initial head position.
    pub fn start(&self) -> Track {
        self.start
    }

    pub fn moves(&self) -> &[HeadMove] {
        &self.moves
    }

    /// Tracks in the order they were serviced.
    pub fn service_order(&self) -> Vec<Track> {
        self.moves
            .iter()
            .filter(|m| m.is_service())
            .map(|m| m.track)
            .collect()
    }

    /// Arrival indices in service order.
    pub fn service_indices(&self) -> Vec<usize> {
        self.moves.iter().filter_map(|m| m.request).collect()
    }

    pub fn step_seeks(&self) -> Vec<u64> {
        self.moves.iter().map(|m| m.seek).collect()
    }

    pub fn total_seek(&self) -> u64 {
        self.moves.iter().map(|m| m.seek).sum()
    }

    /// Positions the head passed through without servicing anything.
    pub fn preliminary_moves(&self) -> Vec<Track> {
        self.moves
            .iter()
            .filter(|m| !m.is_service())
            .map(|m| m.track)
            .collect()
    }

    /// Full head path starting at the initial position.
    pub fn head_path(&self) -> Vec<Track> {
        std::iter::once(self.start)
            .chain(self.moves.iter().map(|m| m.track))
            .collect()
    }

    pub fn serviced_count(&self) -> usize {
        self.moves.iter().filter(|m| m.is_service()).count()
    }
}

/// Runs `algorithm` on a validated instance. Only [`Algorithm::Optimal`] can
/// fail, when the queue exceeds [`BRUTE_FORCE_LIMIT`].
pub fn schedule(algorithm: Algorithm, instance: &Instance) -> Result<Schedule, ScheduleError> {
    let Instance {
        queue,
        head,
        geometry,
    } = instance;
    Ok(match algorithm {
        Algorithm::Fifo => schedule_fifo(queue, *head),
        Algorithm::Sstf => schedule_sstf(queue, *head),
        Algorithm::Scan => schedule_scan(queue, *head, *geometry),
        Algorithm::CScan => schedule_cscan(queue, *head, *geometry),
        Algorithm::Look => schedule_look(queue, *head),
        Algorithm::Odsa => schedule_odsa(queue, *head),
        Algorithm::Optimal => brute_force_optimal(queue, *head)?,
    })
}

/// Accumulates the head path for one schedule.
pub(crate) struct PathBuilder {
    algorithm: Algorithm,
    start: Track,
    position: Track,
    moves: Vec<HeadMove>,
}

impl PathBuilder {
    pub(crate) fn new(algorithm: Algorithm, start: Track) -> Self {
        PathBuilder {
            algorithm,
            start,
            position: start,
            moves: Vec::new(),
        }
    }

    pub(crate) fn service(&mut self, track: Track, request: usize) {
        self.push(track, Some(request));
    }

    pub(crate) fn service_group(&mut self, group: &TrackGroup) {
        for &request in &group.requests {
            self.service(group.track, request);
        }
    }

    /// Moves without servicing. A zero-length pass is dropped.
    pub(crate) fn pass(&mut self, track: Track) {
        if track != self.position {
            self.push(track, None);
        }
    }

    fn push(&mut self, track: Track, request: Option<usize>) {
        let seek = self.position.distance(track);
        self.moves.push(HeadMove {
            track,
            seek,
            request,
        });
        self.position = track;
    }

    pub(crate) fn finish(self) -> Schedule {
        Schedule {
            algorithm: self.algorithm,
            start: self.start,
            moves: self.moves,
        }
    }
}

/// All requests for one distinct track, arrival order preserved.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct TrackGroup {
    pub(crate) track: Track,
    pub(crate) requests: Vec<usize>,
}

/// Groups a queue by track, ascending.
pub(crate) fn group_by_track(requests: &[Track]) -> Vec<TrackGroup> {
    let mut indexed: Vec<(Track, usize)> = requests.iter().copied().zip(0..).collect();
    indexed.sort();
    let mut groups: Vec<TrackGroup> = Vec::new();
    for (track, idx) in indexed {
        match groups.last_mut() {
            Some(g) if g.track == track => g.requests.push(idx),
            _ => groups.push(TrackGroup {
                track,
                requests: vec![idx],
            }),
        }
    }
    groups
}
