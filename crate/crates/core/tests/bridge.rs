use chordcrystal::bridge::{intertwine_check, kostant_a, kostant_height_total};

/// Count multisets of intervals `[i, j]` of `0..k` whose coverage counts are
/// `mu`, by choosing the interval that starts at the first nonzero slot.
fn kostant_by_intervals(mu: &mut Vec<u32>, min_interval: (usize, usize)) -> u64 {
    let Some(start) = mu.iter().position(|&c| c > 0) else {
        return 1;
    };
    let mut total = 0;
    for end in start..mu.len() {
        if mu[end] == 0 {
            break;
        }
        // intervals are taken in nondecreasing order to count multisets
        if (start, end) < min_interval {
            continue;
        }
        for c in &mut mu[start..=end] {
            *c -= 1;
        }
        total += kostant_by_intervals(mu, (start, end));
        for c in &mut mu[start..=end] {
            *c += 1;
        }
    }
    total
}

#[test]
fn kostant_counts_match_interval_enumeration() {
    for a in 0..=3u32 {
        for b in 0..=3u32 {
            for c in 0..=3u32 {
                for d in 0..=2u32 {
                    let mu = [a, b, c, d];
                    assert_eq!(kostant_a(&mu), kostant_by_intervals(&mut mu.to_vec(), (0, 0)), "{mu:?}");
                }
            }
        }
    }
}

#[test]
fn height_totals() {
    // A_1: one root, one multiset per height
    assert_eq!(kostant_height_total(1, 5), 1);
    assert_eq!(kostant_height_total(2, 2), 4);
    let by_weights: u64 = (0..=4u32)
        .flat_map(|a| (0..=4 - a).map(move |b| (a, b)))
        .flat_map(|(a, b)| (0..=4 - a - b).map(move |c| [a, b, c, 4 - a - b - c]))
        .map(|mu| kostant_a(&mu))
        .sum();
    assert_eq!(kostant_height_total(4, 4), by_weights);
}

#[test]
fn intertwining_n2() {
    let r = intertwine_check(2, 5).unwrap();
    assert!(r.passed(), "{:?}", r.mismatches.first());
    assert_eq!(r.operator_checks, 4 * r.module_elements);
}

#[test]
fn intertwining_n3() {
    let r = intertwine_check(3, 3).unwrap();
    assert!(r.passed(), "{:?}", r.mismatches.first());
    assert_eq!(r.operator_checks, 6 * r.module_elements);
    assert_eq!(r.module_layers, [1, 6, 26, 90]);
}
