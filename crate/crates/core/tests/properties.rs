use proptest::prelude::*;

use disksched::metrics::SeekSummary;
use disksched::schedulers::{
    brute_force_optimal, odsa_plan, schedule, sweep_direction, Algorithm, Direction, Schedule,
};
use disksched::{DiskGeometry, HeadState, Instance, RequestQueue, Track, TransferModel};

const ALL: [Algorithm; 7] = [
    Algorithm::Fifo,
    Algorithm::Sstf,
    Algorithm::Scan,
    Algorithm::CScan,
    Algorithm::Look,
    Algorithm::Odsa,
    Algorithm::Optimal,
];

fn instance(max_n: usize) -> impl Strategy<Value = Instance> {
    (0u32..50, 1u32..300).prop_flat_map(move |(min, width)| {
        let max = min + width;
        (proptest::collection::vec(min..=max, 0..=max_n), min..=max).prop_map(move |(q, h)| {
            Instance::new(
                RequestQueue::from_values(q),
                HeadState::at(h),
                DiskGeometry::new(min, max).unwrap(),
            )
            .unwrap()
        })
    })
}

/// Narrow track range so duplicates and ties are common.
fn crowded_instance() -> impl Strategy<Value = Instance> {
    (proptest::collection::vec(0u32..=12, 0..=8), 0u32..=12).prop_map(|(q, h)| {
        Instance::new(
            RequestQueue::from_values(q),
            HeadState::at(h),
            DiskGeometry::new(0, 12).unwrap(),
        )
        .unwrap()
    })
}

fn sorted(mut v: Vec<Track>) -> Vec<Track> {
    v.sort();
    v
}

fn check_schedule(s: &Schedule, inst: &Instance) -> Result<(), TestCaseError> {
    let mut idx = s.service_indices();
    idx.sort_unstable();
    prop_assert_eq!(idx, (0..inst.queue.len()).collect::<Vec<_>>());
    prop_assert_eq!(
        sorted(s.service_order()),
        sorted(inst.queue.requests().to_vec())
    );
    let path = s.head_path();
    prop_assert_eq!(path[0], inst.head.position);
    for (w, seek) in path.windows(2).zip(s.step_seeks()) {
        prop_assert_eq!(w[0].distance(w[1]), seek);
    }
    prop_assert_eq!(s.total_seek(), s.step_seeks().iter().sum::<u64>());
    for t in &path {
        prop_assert!(inst.geometry.contains(*t));
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn schedules_are_consistent_permutations(inst in instance(8)) {
        for alg in ALL {
            check_schedule(&schedule(alg, &inst).unwrap(), &inst)?;
        }
    }

    #[test]
    fn crowded_schedules_are_consistent(inst in crowded_instance()) {
        for alg in ALL {
            check_schedule(&schedule(alg, &inst).unwrap(), &inst)?;
        }
    }

    #[test]
    fn odsa_closed_form(inst in instance(40)) {
        let s = schedule(Algorithm::Odsa, &inst).unwrap();
        match odsa_plan(&inst.queue, inst.head) {
            None => prop_assert_eq!(s.total_seek(), 0),
            Some(plan) => {
                let h = inst.head.position;
                let (lo, hi) = (plan.lowest, plan.highest);
                prop_assert_eq!(plan.initial_seek, h.distance(lo).min(h.distance(hi)));
                prop_assert_eq!(s.total_seek(), plan.initial_seek + lo.distance(hi));
            }
        }
    }

    #[test]
    fn odsa_matches_oracle_and_dominates(inst in instance(7)) {
        let odsa = schedule(Algorithm::Odsa, &inst).unwrap().total_seek();
        let best = brute_force_optimal(&inst.queue, inst.head).unwrap().total_seek();
        prop_assert_eq!(odsa, best);
        for alg in Algorithm::BASELINES_AND_ODSA {
            prop_assert!(odsa <= schedule(alg, &inst).unwrap().total_seek(), "{}", alg);
        }
    }

    #[test]
    fn crowded_odsa_matches_oracle(inst in crowded_instance()) {
        let odsa = schedule(Algorithm::Odsa, &inst).unwrap().total_seek();
        let best = brute_force_optimal(&inst.queue, inst.head).unwrap().total_seek();
        prop_assert_eq!(odsa, best);
    }

    #[test]
    fn odsa_sweep_is_monotone(inst in instance(30)) {
        let order = schedule(Algorithm::Odsa, &inst).unwrap().service_order();
        let up = order.windows(2).all(|w| w[0] <= w[1]);
        let down = order.windows(2).all(|w| w[0] >= w[1]);
        prop_assert!(up || down);
    }

    #[test]
    fn fifo_keeps_arrival_order(inst in instance(20)) {
        let s = schedule(Algorithm::Fifo, &inst).unwrap();
        prop_assert_eq!(s.service_indices(), (0..inst.queue.len()).collect::<Vec<_>>());
    }

    #[test]
    fn sstf_always_takes_a_nearest_request(inst in crowded_instance()) {
        let s = schedule(Algorithm::Sstf, &inst).unwrap();
        let mut pending: Vec<Track> = inst.queue.requests().to_vec();
        let mut pos = inst.head.position;
        for m in s.moves() {
            let nearest = pending.iter().map(|t| pos.distance(*t)).min().unwrap();
            prop_assert_eq!(m.seek, nearest);
            let i = pending.iter().position(|t| *t == m.track).unwrap();
            pending.swap_remove(i);
            pos = m.track;
        }
    }

    #[test]
    fn look_reverses_at_most_once(inst in instance(20)) {
        let path = schedule(Algorithm::Look, &inst).unwrap().head_path();
        let turns = path
            .windows(3)
            .filter(|w| (w[1] > w[0] && w[2] < w[1]) || (w[1] < w[0] && w[2] > w[1]))
            .count();
        prop_assert!(turns <= 1);
    }

    #[test]
    fn sweep_starts_toward_the_majority(inst in instance(20)) {
        let h = inst.head.position;
        let below = inst.queue.iter().filter(|t| *t < h).count();
        let above = inst.queue.iter().filter(|t| *t > h).count();
        let dir = sweep_direction(&inst.queue, inst.head);
        if below > above {
            prop_assert_eq!(dir, Direction::Down);
        } else if above > below {
            prop_assert_eq!(dir, Direction::Up);
        }
    }

    #[test]
    fn cscan_wrap_costs_full_width(inst in instance(20)) {
        let s = schedule(Algorithm::CScan, &inst).unwrap();
        let g = inst.geometry;
        let wraps: Vec<_> = s.moves().iter().filter(|m| !m.is_service() && m.seek == g.width()).collect();
        let pre = s.preliminary_moves();
        if !pre.is_empty() {
            prop_assert_eq!(wraps.len(), 1);
            let end = *pre.last().unwrap();
            prop_assert!(end == g.min_track || end == g.max_track);
        }
    }

    #[test]
    fn summary_invariants(inst in instance(20)) {
        let model = TransferModel::default();
        for alg in Algorithm::BASELINES_AND_ODSA {
            let s = schedule(alg, &inst).unwrap();
            let summary = SeekSummary::of(&s, &model).unwrap();
            prop_assert_eq!(summary.total_seek, s.total_seek());
            match (summary.average_seek, summary.transfer_time) {
                (Some(avg), Some(tt)) => {
                    prop_assert_eq!(avg, s.total_seek() as f64 / inst.queue.len() as f64);
                    prop_assert!(tt >= avg);
                }
                (None, None) => prop_assert!(inst.queue.is_empty()),
                _ => prop_assert!(false, "average and transfer must both be present or absent"),
            }
        }
    }
}
