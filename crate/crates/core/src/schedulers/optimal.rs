//! Exhaustive minimum-seek search, used as a test oracle.

use super::{Algorithm, PathBuilder, Schedule, ScheduleError};
use crate::model::{HeadState, RequestQueue, Track};

/// Largest queue [`brute_force_optimal`] will search.
pub const BRUTE_FORCE_LIMIT: usize = 9;

/// Searches every service order of the queue (as a multiset of tracks) and
/// returns the cheapest. Among equally cheap orders the lexicographically
/// smallest track sequence wins. Duplicate tracks are mapped back to
/// request indices in arrival order.
pub fn brute_force_optimal(
    queue: &RequestQueue,
    head: HeadState,
) -> Result<Schedule, ScheduleError> {
    let n = queue.len();
    if n > BRUTE_FORCE_LIMIT {
        return Err(ScheduleError::TooLarge {
            n,
            limit: BRUTE_FORCE_LIMIT,
        });
    }
    let mut pool: Vec<u32> = queue.iter().map(Track::value).collect();
    pool.sort_unstable();

    let mut search = Search {
        pool,
        used: vec![false; n],
        current: Vec::with_capacity(n),
        best: None,
    };
    search.descend(head.position.value(), 0);

    let order = search.best.map(|(_, order)| order).unwrap_or_default();
    let mut taken = vec![false; n];
    let mut path = PathBuilder::new(Algorithm::Optimal, head.position);
    for track in order {
        let idx = queue
            .iter()
            .enumerate()
            .position(|(i, t)| !taken[i] && t.value() == track)
            .expect("order is a permutation of the queue");
        taken[idx] = true;
        path.service(Track(track), idx);
    }
    Ok(path.finish())
}

struct Search {
    pool: Vec<u32>,
    used: Vec<bool>,
    current: Vec<u32>,
    best: Option<(u64, Vec<u32>)>,
}

impl Search {
    // Visits orders in lexicographic order and keeps only strict
    // improvements, so the first optimum found is the lexicographic minimum.
    fn descend(&mut self, pos: u32, cost: u64) {
        if let Some((best, _)) = &self.best {
            if cost >= *best {
                return;
            }
        }
        if self.current.len() == self.pool.len() {
            self.best = Some((cost, self.current.clone()));
            return;
        }
        let mut last_tried = None;
        for i in 0..self.pool.len() {
            let t = self.pool[i];
            if self.used[i] || last_tried == Some(t) {
                continue;
            }
            last_tried = Some(t);
            self.used[i] = true;
            self.current.push(t);
            self.descend(t, cost + u64::from(pos.abs_diff(t)));
            self.current.pop();
            self.used[i] = false;
        }
    }
}
