use super::{Algorithm, PathBuilder, Schedule};
use crate::model::{HeadState, RequestQueue};

/// Services requests strictly in arrival order.
pub fn schedule_fifo(queue: &RequestQueue, head: HeadState) -> Schedule {
    let mut path = PathBuilder::new(Algorithm::Fifo, head.position);
    for (idx, track) in queue.iter().enumerate() {
        path.service(track, idx);
    }
    path.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::Track;

    #[test]
    fn case1_total() {
        let q = RequestQueue::from_values([25, 10, 151, 170, 62, 46, 74, 111]);
        let s = schedule_fifo(&q, HeadState::at(45));
        assert_eq!(s.total_seek(), 384);
        assert_eq!(s.service_order(), q.requests());
        assert_eq!(s.step_seeks(), vec![20, 15, 141, 19, 108, 16, 28, 37]);
    }

    #[test]
    fn case2_total() {
        let q = RequestQueue::from_values([16, 75, 24, 21, 30, 80, 116, 63]);
        assert_eq!(schedule_fifo(&q, HeadState::at(66)).total_seek(), 311);
    }

    #[test]
    fn single_request() {
        let s = schedule_fifo(&RequestQueue::from_values([100]), HeadState::at(45));
        assert_eq!(s.total_seek(), 55);
        assert_eq!(s.service_order(), vec![Track(100)]);
    }
}
