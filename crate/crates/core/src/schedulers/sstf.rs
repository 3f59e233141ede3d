//! Shortest-seek-first.
//!
//! The greedy head always moves to the nearest pending track, so the set of
//! serviced tracks is a contiguous block of the sorted queue around the
//! start position and the next candidate is one of its two neighbours.
//! When both neighbours are equally far the choice changes the rest of the
//! path, so it is resolved by comparing the remaining greedy cost of each
//! branch; if those are equal too, the lower track wins.

use std::collections::HashMap;

use super::{group_by_track, Algorithm, PathBuilder, Schedule, TrackGroup};
use crate::model::{HeadState, RequestQueue};

#[derive(Clone, Copy)]
enum Step {
    Down,
    Up,
}

/// Serviced groups form `groups[lo..hi]`; `pos` is the current head track.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
struct State {
    lo: usize,
    hi: usize,
    pos: u32,
}

struct Planner<'a> {
    tracks: Vec<u32>,
    groups: &'a [TrackGroup],
    // Remaining cost from tie states only.
    memo: HashMap<State, u64>,
}

enum Choice {
    Done,
    Forced(Step, u64),
    Tie(u64),
}

impl<'a> Planner<'a> {
    fn new(groups: &'a [TrackGroup]) -> Self {
        Planner {
            tracks: groups.iter().map(|g| g.track.value()).collect(),
            groups,
            memo: HashMap::new(),
        }
    }

    fn choice(&self, s: State) -> Choice {
        let down = (s.lo > 0).then(|| u64::from(s.pos.abs_diff(self.tracks[s.lo - 1])));
        let up = (s.hi < self.tracks.len()).then(|| u64::from(s.pos.abs_diff(self.tracks[s.hi])));
        match (down, up) {
            (None, None) => Choice::Done,
            (Some(d), None) => Choice::Forced(Step::Down, d),
            (None, Some(u)) => Choice::Forced(Step::Up, u),
            (Some(d), Some(u)) if d < u => Choice::Forced(Step::Down, d),
            (Some(d), Some(u)) if u < d => Choice::Forced(Step::Up, u),
            (Some(d), Some(_)) => Choice::Tie(d),
        }
    }

    fn advance(&self, s: State, step: Step) -> State {
        match step {
            Step::Down => State {
                lo: s.lo - 1,
                hi: s.hi,
                pos: self.tracks[s.lo - 1],
            },
            Step::Up => State {
                lo: s.lo,
                hi: s.hi + 1,
                pos: self.tracks[s.hi],
            },
        }
    }

    /// Greedy cost still to pay from `s`, ties resolved to the cheaper branch.
    fn remaining(&mut self, mut s: State) -> u64 {
        let mut acc = 0;
        loop {
            match self.choice(s) {
                Choice::Done => return acc,
                Choice::Forced(step, d) => {
                    acc += d;
                    s = self.advance(s, step);
                }
                Choice::Tie(d) => return acc + self.tie_cost(s, d),
            }
        }
    }

    fn tie_cost(&mut self, s: State, d: u64) -> u64 {
        if let Some(&c) = self.memo.get(&s) {
            return c;
        }
        let (down, up) = self.tie_branches(s);
        let c = d + down.min(up);
        self.memo.insert(s, c);
        c
    }

    fn tie_branches(&mut self, s: State) -> (u64, u64) {
        let down = self.remaining(self.advance(s, Step::Down));
        let up = self.remaining(self.advance(s, Step::Up));
        (down, up)
    }

    fn next(&mut self, s: State) -> Option<Step> {
        match self.choice(s) {
            Choice::Done => None,
            Choice::Forced(step, _) => Some(step),
            Choice::Tie(_) => {
                let (down, up) = self.tie_branches(s);
                Some(if up < down { Step::Up } else { Step::Down })
            }
        }
    }
}

pub fn schedule_sstf(queue: &RequestQueue, head: HeadState) -> Schedule {
    let groups = group_by_track(queue.requests());
    let mut planner = Planner::new(&groups);
    let insert_at = planner
        .tracks
        .partition_point(|&t| t < head.position.value());
    let mut state = State {
        lo: insert_at,
        hi: insert_at,
        pos: head.position.value(),
    };
    let mut path = PathBuilder::new(Algorithm::Sstf, head.position);
    while let Some(step) = planner.next(state) {
        let idx = match step {
            Step::Down => state.lo - 1,
            Step::Up => state.hi,
        };
        path.service_group(&planner.groups[idx]);
        state = planner.advance(state, step);
    }
    path.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::Track;

    fn order(s: &Schedule) -> Vec<u32> {
        s.service_order().into_iter().map(Track::value).collect()
    }

    #[test]
    fn case1() {
        let q = RequestQueue::from_values([25, 10, 151, 170, 62, 46, 74, 111]);
        let s = schedule_sstf(&q, HeadState::at(45));
        assert_eq!(order(&s), vec![46, 62, 74, 111, 151, 170, 25, 10]);
        assert_eq!(s.total_seek(), 285);
    }

    #[test]
    fn case2() {
        let q = RequestQueue::from_values([16, 75, 24, 21, 30, 80, 116, 63]);
        assert_eq!(schedule_sstf(&q, HeadState::at(66)).total_seek(), 156);
    }

    #[test]
    fn case3() {
        let q = RequestQueue::from_values([25, 33, 54, 64, 40, 90, 110, 160]);
        assert_eq!(schedule_sstf(&q, HeadState::at(125)).total_seek(), 235);
    }

    #[test]
    fn symmetric_tie_goes_low() {
        let s = schedule_sstf(&RequestQueue::from_values([60, 40]), HeadState::at(50));
        assert_eq!(order(&s), vec![40, 60]);
        assert_eq!(s.total_seek(), 30);
    }

    #[test]
    fn tie_takes_cheaper_branch() {
        // Low first: 10 + 20 + 40 = 70. High first: 10 + 20 + 60 = 90.
        let s = schedule_sstf(&RequestQueue::from_values([60, 40, 100]), HeadState::at(50));
        assert_eq!(order(&s), vec![40, 60, 100]);
        assert_eq!(s.total_seek(), 70);
        // Mirror image: going high is cheaper.
        let s = schedule_sstf(
            &RequestQueue::from_values([120, 140, 80]),
            HeadState::at(130),
        );
        assert_eq!(order(&s), vec![140, 120, 80]);
        assert_eq!(s.total_seek(), 70);
    }

    #[test]
    fn nested_ties() {
        // Head 50, evenly spaced every 10 on both sides: ties at each step.
        let q = RequestQueue::from_values([20, 30, 40, 60, 70, 80, 95]);
        let s = schedule_sstf(&q, HeadState::at(50));
        let mut sorted = order(&s);
        sorted.sort();
        assert_eq!(sorted, vec![20, 30, 40, 60, 70, 80, 95]);
        // Every greedy path: the cheapest sweeps low first then high.
        assert_eq!(s.total_seek(), 30 + 75);
    }

    #[test]
    fn request_at_head_first() {
        let s = schedule_sstf(&RequestQueue::from_values([70, 50, 20]), HeadState::at(50));
        assert_eq!(s.moves()[0].seek, 0);
        assert_eq!(s.moves()[0].track, Track(50));
    }
}
