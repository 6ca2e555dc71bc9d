use distinct_cores::exec::ExecMode;
use distinct_cores::extremal::{
    beta_ideal, beta_max_j, exhaustive_maximum, gamma_ideal, lambda_size, largest_size, max_partition, mu_size,
};
use distinct_cores::GapPoset;

#[test]
fn constructions_are_nice_ideals() {
    for k in 1..=6u64 {
        let m = GapPoset::truncated(k).unwrap();
        let p = GapPoset::new(2 * k + 1, 2 * k + 3).unwrap();
        for i in 1..=2 * k {
            for j in 0..=beta_max_j(k, i).unwrap() {
                let b = beta_ideal(k, i, j).unwrap();
                m.check_ideal(&b).unwrap();
                assert!(b.is_nice());
            }
        }
        for j in 1..=k {
            let g = gamma_ideal(k, j).unwrap();
            p.check_ideal(&g).unwrap();
            assert!(g.is_nice() && g.contains(2 * k + 2));
        }
    }
}

#[test]
fn staircase_is_a_full_type_a_ideal() {
    // β_{i,0} ∋ i + 2c + r(2k+3) ↦ (rank r, position c) of P_{m+1,m+2}
    for k in 1..=6u64 {
        let d = 2 * k + 3;
        let m_poset = GapPoset::truncated(k).unwrap();
        for i in 1..=2 * k {
            let m = k - i.div_ceil(2);
            let block = beta_ideal(k, i, 0).unwrap();
            let target = GapPoset::new(m + 1, m + 2).unwrap();
            assert_eq!(block.len(), target.len(), "k={k} i={i}");
            let relabel = |v: u64| {
                let r = (v - i) / d;
                let c = (v - i - r * d) / 2;
                c + r * (m + 2)
            };
            for &v in block.members() {
                let mut inside: Vec<u64> = m_poset
                    .covered_by(v)
                    .into_iter()
                    .filter(|&w| block.contains(w))
                    .map(relabel)
                    .collect();
                inside.sort_unstable();
                assert_eq!(inside, target.covered_by(relabel(v)), "k={k} i={i} v={v}");
            }
        }
    }
}

#[test]
fn closed_forms_match_beta_sets() {
    for k in 1..=6u64 {
        for i in 1..=2 * k {
            for j in 0..=beta_max_j(k, i).unwrap() {
                let direct = beta_ideal(k, i, j).unwrap().beta_set().size().unwrap();
                assert_eq!(lambda_size(k, i, j).unwrap(), direct, "k={k} i={i} j={j}");
                assert_eq!(beta_ideal(k, i, j).unwrap().partition().size().unwrap(), direct);
            }
        }
        for i in 1..=k {
            let direct = gamma_ideal(k, i).unwrap().beta_set().size().unwrap();
            assert_eq!(mu_size(k, i).unwrap(), direct, "k={k} i={i}");
        }
        let (a, b) = (lambda_size(k, 2, k).unwrap(), lambda_size(k, 1, k).unwrap());
        assert_eq!(a - b, k * (k + 1) / 2);
        assert_eq!(mu_size(k, k).unwrap() - b, k * (k + 1) * (k + 2) / 2);
        assert_eq!(mu_size(k, k).unwrap(), largest_size(k).unwrap());
    }
}

#[test]
fn monotonicity_in_the_chain_length() {
    for k in 1..=6u64 {
        for i in 1..=2 * k {
            let top = beta_max_j(k, i).unwrap();
            let best = lambda_size(k, i, top).unwrap();
            for j in 1..top {
                assert!(lambda_size(k, i, j).unwrap() < best, "k={k} i={i} j={j}");
            }
        }
        let best = mu_size(k, k).unwrap();
        for i in 1..k {
            assert!(mu_size(k, i).unwrap() < best, "k={k} i={i}");
        }
        assert!(best > lambda_size(k, 2, k).unwrap());
    }
}

#[test]
fn shift_identity() {
    for k in 1..=6u64 {
        for i in 3..=2 * k {
            let top = beta_max_j(k, i).unwrap();
            assert_eq!(
                beta_ideal(k, i, top).unwrap().members(),
                beta_ideal(k, i - 2, 0).unwrap().members(),
                "k={k} i={i}"
            );
        }
    }
}

#[test]
fn full_chain_beats_the_next_start() {
    // Also holds for k = 2; for k = 1 the range of i is empty.
    for k in 1..=8u64 {
        for i in 1..=2 * k - 2 {
            let size = |i| {
                let b = beta_ideal(k, i, beta_max_j(k, i).unwrap()).unwrap();
                b.beta_set().size().unwrap()
            };
            let (here, next) = (size(i), size(i + 2));
            assert!(here > next, "k={k} i={i}: {here} <= {next}");
        }
    }
}

#[test]
fn unique_maximum_is_gamma() {
    let want = [0u64, 4, 21, 65, 155];
    for k in 0..=4u64 {
        for mode in [ExecMode::Sequential, ExecMode::Parallel] {
            let m = exhaustive_maximum(k, mode).unwrap();
            assert_eq!(m.size, want[k as usize], "k={k}");
            assert_eq!(m.maximizers, 1, "k={k}");
            assert_eq!(m.ideal.partition(), max_partition(k).unwrap());
            if k > 0 {
                assert_eq!(m.ideal, gamma_ideal(k, k).unwrap());
            }
        }
    }
}
