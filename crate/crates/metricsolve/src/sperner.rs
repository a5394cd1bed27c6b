//! Set representation through the Sperner family of p-subsets of [2p].
//!
//! All p-subsets of a 2p-element ground set are pairwise incomparable, so
//! wiring element i to the subset `rep(i)` and a partner to the
//! complement of `rep(j)` creates a common neighbor exactly when `i != j`.

/// Binomial coefficient, saturating; inputs stay tiny.
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut result: u64 = 1;
    for i in 0..k {
        result = result.saturating_mul((n - i) as u64) / (i as u64 + 1);
    }
    result
}

/// Smallest positive `p` with `ell <= C(2p, p)`, plus the injective map
/// from `1..=ell` to p-subsets of `[2p]` (1-based, ascending), enumerated
/// in colexicographic order.
pub fn sperner_set_rep(ell: usize) -> (usize, Vec<Vec<usize>>) {
    assert!(ell >= 1);
    let mut p = 1;
    while binomial(2 * p, p) < ell as u64 {
        p += 1;
    }
    let mut subsets = Vec::with_capacity(binomial(2 * p, p) as usize);
    let mut current: Vec<usize> = (1..=p).collect();
    loop {
        subsets.push(current.clone());
        // Next p-subset of [2p] in colexicographic order.
        let mut i = 0;
        while i < p {
            let upper = if i + 1 < p { current[i + 1] - 1 } else { 2 * p };
            if current[i] < upper {
                current[i] += 1;
                for (j, slot) in current.iter_mut().enumerate().take(i) {
                    *slot = j + 1;
                }
                break;
            }
            i += 1;
        }
        if i == p {
            break;
        }
    }
    subsets.truncate(ell);
    debug_assert_eq!(subsets.len(), ell);
    (p, subsets)
}

/// Bitmask form of [`sperner_set_rep`] images (bit `e-1` for element `e`).
pub fn sperner_masks(ell: usize) -> (usize, Vec<u32>) {
    let (p, subsets) = sperner_set_rep(ell);
    let masks = subsets
        .iter()
        .map(|s| s.iter().fold(0u32, |m, &e| m | 1 << (e - 1)))
        .collect();
    (p, masks)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smallest_p_examples() {
        assert_eq!(sperner_set_rep(2).0, 1);
        assert_eq!(sperner_set_rep(6).0, 2);
        assert_eq!(sperner_set_rep(20).0, 3);
        assert_eq!(sperner_set_rep(21).0, 4);
    }

    #[test]
    fn ell_two() {
        let (p, map) = sperner_set_rep(2);
        assert_eq!(p, 1);
        assert_eq!(map, vec![vec![1], vec![2]]);
    }

    #[test]
    fn images_are_valid_and_injective() {
        for ell in [1, 2, 5, 6, 7, 20, 70] {
            let (p, map) = sperner_set_rep(ell);
            assert_eq!(map.len(), ell);
            let mut seen = std::collections::HashSet::new();
            for s in &map {
                assert_eq!(s.len(), p);
                assert!(s.iter().all(|&e| (1..=2 * p).contains(&e)));
                assert!(seen.insert(s.clone()));
            }
        }
    }

    #[test]
    fn colex_order() {
        let (_, map) = sperner_set_rep(6);
        assert_eq!(
            map,
            vec![
                vec![1, 2],
                vec![1, 3],
                vec![2, 3],
                vec![1, 4],
                vec![2, 4],
                vec![3, 4],
            ]
        );
    }

    #[test]
    fn pairwise_incomparable() {
        let (_, masks) = sperner_masks(70);
        for (i, &a) in masks.iter().enumerate() {
            for &b in &masks[i + 1..] {
                assert!(a & !b != 0 && b & !a != 0);
            }
        }
    }
}
