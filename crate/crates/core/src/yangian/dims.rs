//! PBW word counts per canonical degree.

use super::{Mode, YangianAlgebra};

/// Degrees of the free PBW generators, ascending. Truncated modes have a
/// finite list; in full mode the list grows with the degree cap and the
/// counts are those of the full PBW monoid.
pub fn generator_degrees(alg: &YangianAlgebra, degree_cap: u64) -> Vec<u64> {
    let n = u64::from(alg.n());
    let top = 2 * n - 1;
    let mut degrees: Vec<u64> = match alg.mode() {
        Mode::TruncatedGl => {
            // D1^1, D2^1..D2^{2n-1}, E^{2n-1}, F^1
            let mut d = vec![1, top, 1];
            d.extend(1..=top);
            d
        }
        Mode::TruncatedSo => {
            // D1^1, D2^2, D2^4, .., D2^{2n-2}, E^{2n-1}, F^1
            let mut d = vec![1, top, 1];
            d.extend((1..n).map(|k| 2 * k));
            d
        }
        Mode::Full => {
            let mut d = Vec::new();
            for r in 1..=degree_cap {
                d.push(r); // D1
                d.push(r); // D2
                d.push(r); // F
            }
            for r in top..=degree_cap {
                d.push(r); // E
            }
            d
        }
    };
    degrees.sort_unstable();
    degrees
}

/// Number of PBW-basis words of each canonical degree `0..=degree`: the
/// coefficients of `prod_g 1/(1 - t^{deg g})` over the generator list.
pub fn graded_dimension(alg: &YangianAlgebra, degree: u64) -> Vec<u64> {
    let degrees = generator_degrees(alg, degree);
    counts_for_degrees(&degrees, degree)
}

pub fn counts_for_degrees(degrees: &[u64], degree: u64) -> Vec<u64> {
    let d = degree as usize;
    let mut counts = vec![0u64; d + 1];
    counts[0] = 1;
    for &g in degrees {
        let g = g as usize;
        if g == 0 || g > d {
            continue;
        }
        for k in g..=d {
            counts[k] += counts[k - g];
        }
    }
    counts
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::yangian::{Mode, YangianAlgebra};

    /// Independent route: enumerate the multisets over the generator
    /// degrees directly.
    fn enumerate(degrees: &[u64], degree: u64) -> Vec<u64> {
        fn go(degrees: &[u64], remaining: u64, counts: &mut [u64], used: u64) {
            counts[used as usize] += 1;
            for (i, &g) in degrees.iter().enumerate() {
                if g <= remaining {
                    // keep picks non-decreasing by index to count multisets once
                    go(&degrees[i..], remaining - g, counts, used + g);
                }
            }
        }
        let mut counts = vec![0u64; degree as usize + 1];
        go(degrees, degree, &mut counts, 0);
        counts
    }

    #[test]
    fn truncated_generator_degrees() {
        let gl = YangianAlgebra::new(2, Mode::TruncatedGl).unwrap();
        assert_eq!(generator_degrees(&gl, 10), vec![1, 1, 1, 2, 3, 3]);
        let so = YangianAlgebra::new(2, Mode::TruncatedSo).unwrap();
        assert_eq!(generator_degrees(&so, 10), vec![1, 1, 2, 3]);
    }

    #[test]
    fn degree_zero_count_is_one() {
        let so = YangianAlgebra::new(2, Mode::TruncatedSo).unwrap();
        assert_eq!(graded_dimension(&so, 0), vec![1]);
    }

    #[test]
    fn product_formula_matches_enumeration() {
        for mode in [Mode::TruncatedGl, Mode::TruncatedSo, Mode::Full] {
            let alg = YangianAlgebra::new(2, mode).unwrap();
            let degrees = generator_degrees(&alg, 8);
            assert_eq!(
                graded_dimension(&alg, 8),
                enumerate(&degrees, 8),
                "mode {mode}"
            );
        }
    }

    #[test]
    fn small_counts_by_hand() {
        let so = YangianAlgebra::new(2, Mode::TruncatedSo).unwrap();
        let counts = graded_dimension(&so, 4);
        // degrees {1, 1, 2, 3}:
        // degree 1: D1^1, F^1 -> 2
        // degree 2: three words on the two degree-1 letters + D2^2 -> 4
        // degree 3: four cubes + D2^2 * (two letters) + E^3 -> 7
        // degree 4: five quartics + D2^2 * (three words) + D2^2^2 + E^3 * (two) -> 11
        assert_eq!(counts, vec![1, 2, 4, 7, 11]);
    }
}
