//! Nearest-extreme sweep.
//!
//! The queue is sorted, the head jumps to whichever end of the request
//! span (lowest or highest track) is closer, and then sweeps once across
//! the span to the other end. When both ends are equally close the sweep
//! starts from the low end; the total is the same either way.
//!
//! Total seek is `min(|head - lowest|, |head - highest|) + (highest - lowest)`,
//! which is the shortest possible head path that touches every request.

use serde::{Deserialize, Serialize};

use super::{group_by_track, Algorithm, PathBuilder, Schedule};
use crate::model::{HeadState, RequestQueue, Track};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SweepStart {
    Low,
    High,
}

/// The decision made before the sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct OdsaPlan {
    pub lowest: Track,
    pub highest: Track,
    /// Distance from the head to the chosen starting end.
    pub initial_seek: u64,
    pub start_end: SweepStart,
}

impl OdsaPlan {
    pub fn span(&self) -> u64 {
        self.lowest.distance(self.highest)
    }

    pub fn total_seek(&self) -> u64 {
        self.initial_seek + self.span()
    }
}

/// `None` for an empty queue.
pub fn odsa_plan(queue: &RequestQueue, head: HeadState) -> Option<OdsaPlan> {
    let lowest = queue.lowest()?;
    let highest = queue.highest()?;
    let to_low = head.position.distance(lowest);
    let to_high = head.position.distance(highest);
    let (initial_seek, start_end) = if to_low <= to_high {
        (to_low, SweepStart::Low)
    } else {
        (to_high, SweepStart::High)
    };
    Some(OdsaPlan {
        lowest,
        highest,
        initial_seek,
        start_end,
    })
}

/// The jump to the starting end services only the request it lands on;
/// anything passed over is picked up by the sweep.
pub fn schedule_odsa(queue: &RequestQueue, head: HeadState) -> Schedule {
    let mut path = PathBuilder::new(Algorithm::Odsa, head.position);
    let Some(plan) = odsa_plan(queue, head) else {
        return path.finish();
    };
    let groups = group_by_track(queue.requests());
    match plan.start_end {
        SweepStart::Low => groups.iter().for_each(|g| path.service_group(g)),
        SweepStart::High => groups.iter().rev().for_each(|g| path.service_group(g)),
    }
    path.finish()
}
