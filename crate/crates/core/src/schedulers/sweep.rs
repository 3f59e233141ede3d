//! Elevator-style policies: SCAN, C-SCAN and LOOK.
//!
//! All three first service any request sitting exactly under the head,
//! then sweep in the direction picked by [`sweep_direction`].

use serde::{Deserialize, Serialize};

use super::{group_by_track, Algorithm, PathBuilder, Schedule, TrackGroup};
use crate::model::{DiskGeometry, HeadState, RequestQueue};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Up,
    Down,
}

/// Requests split around the head: below (descending from the head),
/// exactly at the head, and above (ascending from the head).
struct Sides {
    below: Vec<TrackGroup>,
    at_head: Option<TrackGroup>,
    above: Vec<TrackGroup>,
}

impl Sides {
    fn split(queue: &RequestQueue, head: HeadState) -> Self {
        let mut below = Vec::new();
        let mut at_head = None;
        let mut above = Vec::new();
        for g in group_by_track(queue.requests()) {
            match g.track.cmp(&head.position) {
                std::cmp::Ordering::Less => below.push(g),
                std::cmp::Ordering::Equal => at_head = Some(g),
                std::cmp::Ordering::Greater => above.push(g),
            }
        }
        below.reverse();
        Sides {
            below,
            at_head,
            above,
        }
    }

    fn direction(&self, head: HeadState) -> Direction {
        let count = |side: &[TrackGroup]| side.iter().map(|g| g.requests.len()).sum::<usize>();
        let (n_below, n_above) = (count(&self.below), count(&self.above));
        if n_below != n_above {
            return if n_below > n_above {
                Direction::Down
            } else {
                Direction::Up
            };
        }
        // Equal counts: head toward the nearer outermost request.
        match (self.below.last(), self.above.last()) {
            (Some(low), Some(high))
                if head.position.distance(low.track) < head.position.distance(high.track) =>
            {
                Direction::Down
            }
            _ => Direction::Up,
        }
    }
}

/// Side holding more pending requests (strictly below vs strictly above the
/// head). On a tie, the side whose outermost request is closer; if that
/// ties too, up.
pub fn sweep_direction(queue: &RequestQueue, head: HeadState) -> Direction {
    Sides::split(queue, head).direction(head)
}

fn start(
    algorithm: Algorithm,
    queue: &RequestQueue,
    head: HeadState,
) -> (PathBuilder, Sides, Direction) {
    let sides = Sides::split(queue, head);
    let direction = sides.direction(head);
    let mut path = PathBuilder::new(algorithm, head.position);
    if let Some(g) = &sides.at_head {
        path.service_group(g);
    }
    (path, sides, direction)
}

/// Sweeps to the physical end of the disk, reverses, and stops at the last
/// pending request. The run to the end only happens if requests remain
/// behind the head.
pub fn schedule_scan(queue: &RequestQueue, head: HeadState, geometry: DiskGeometry) -> Schedule {
    let (mut path, sides, direction) = start(Algorithm::Scan, queue, head);
    let (ahead, behind, end) = match direction {
        Direction::Up => (&sides.above, &sides.below, geometry.max_track),
        Direction::Down => (&sides.below, &sides.above, geometry.min_track),
    };
    ahead.iter().for_each(|g| path.service_group(g));
    if !behind.is_empty() {
        path.pass(end);
        behind.iter().for_each(|g| path.service_group(g));
    }
    path.finish()
}

/// Sweeps to the physical end, returns to the opposite end (costing the
/// full disk width), and carries on in the same direction.
pub fn schedule_cscan(queue: &RequestQueue, head: HeadState, geometry: DiskGeometry) -> Schedule {
    let (mut path, sides, direction) = start(Algorithm::CScan, queue, head);
    let (ahead, behind, end, opposite) = match direction {
        Direction::Up => (
            &sides.above,
            &sides.below,
            geometry.max_track,
            geometry.min_track,
        ),
        Direction::Down => (
            &sides.below,
            &sides.above,
            geometry.min_track,
            geometry.max_track,
        ),
    };
    ahead.iter().for_each(|g| path.service_group(g));
    if !behind.is_empty() {
        path.pass(end);
        path.pass(opposite);
        behind.iter().rev().for_each(|g| path.service_group(g));
    }
    path.finish()
}

/// SCAN that turns around at the outermost pending request.
pub fn schedule_look(queue: &RequestQueue, head: HeadState) -> Schedule {
    let (mut path, sides, direction) = start(Algorithm::Look, queue, head);
    let (ahead, behind) = match direction {
        Direction::Up => (&sides.above, &sides.below),
        Direction::Down => (&sides.below, &sides.above),
    };
    ahead
        .iter()
        .chain(behind.iter())
        .for_each(|g| path.service_group(g));
    path.finish()
}
