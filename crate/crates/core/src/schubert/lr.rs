//! Littlewood-Richardson coefficients by direct enumeration of LR tableaux.

use crate::exact::Partition;

/// `c^nu_{lambda,mu}`: the number of semistandard fillings of `nu / lambda`
/// with content `mu` whose reverse reading word is a lattice word.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if nu.size() != lambda.size() + mu.size() || !nu.contains(lambda) || !nu.contains(mu) {
        return 0;
    }
    let rows = nu.len();
    let outer: Vec<usize> = (0..rows).map(|i| nu.part(i)).collect();
    let inner: Vec<usize> = (0..rows).map(|i| lambda.part(i)).collect();
    let content: Vec<usize> = mu.parts().to_vec();
    let mut filling: Vec<Vec<usize>> = (0..rows).map(|i| vec![0; outer[i]]).collect();
    let mut counts = vec![0usize; content.len() + 1];
    let mut total = 0;
    fill(
        0,
        outer.first().copied().unwrap_or(0),
        &outer,
        &inner,
        &content,
        &mut filling,
        &mut counts,
        &mut total,
    );
    total
}

/// Fills row `row` from column `col - 1` leftwards (reading order), then moves on
/// to the next row.
#[allow(clippy::too_many_arguments)]
fn fill(
    row: usize,
    col: usize,
    outer: &[usize],
    inner: &[usize],
    content: &[usize],
    filling: &mut Vec<Vec<usize>>,
    counts: &mut Vec<usize>,
    total: &mut u64,
) {
    if row == outer.len() {
        if counts[1..].iter().zip(content).all(|(c, m)| c == m) {
            *total += 1;
        }
        return;
    }
    if col == inner[row] {
        let next_col = outer.get(row + 1).copied().unwrap_or(0);
        fill(
            row + 1,
            next_col,
            outer,
            inner,
            content,
            filling,
            counts,
            total,
        );
        return;
    }
    let j = col - 1;
    // weakly increasing along the row: the entry to the right bounds us above
    let upper = if col < outer[row] {
        filling[row][col]
    } else {
        content.len()
    };
    // strictly increasing down columns
    let lower = if row > 0 && j >= inner[row - 1] {
        filling[row - 1][j] + 1
    } else {
        1
    };
    for v in lower..=upper {
        if counts[v] >= content[v - 1] {
            continue;
        }
        if v > 1 && counts[v] + 1 > counts[v - 1] {
            continue;
        }
        counts[v] += 1;
        filling[row][j] = v;
        fill(row, col - 1, outer, inner, content, filling, counts, total);
        counts[v] -= 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn classical_coefficients() {
        // s_{21} s_{21} = s_{42} + s_{411} + s_{33} + 2 s_{321} + s_{3111} + s_{222} + s_{2211}
        let l = p(&[2, 1]);
        assert_eq!(lr_coefficient(&l, &l, &p(&[3, 2, 1])), 2);
        assert_eq!(lr_coefficient(&l, &l, &p(&[4, 2])), 1);
        assert_eq!(lr_coefficient(&l, &l, &p(&[2, 2, 1, 1])), 1);
        assert_eq!(lr_coefficient(&l, &l, &p(&[4, 1, 1])), 1);
        assert_eq!(lr_coefficient(&l, &l, &p(&[2, 2, 2])), 1);
        assert_eq!(lr_coefficient(&l, &l, &p(&[5, 1])), 0);
        assert_eq!(lr_coefficient(&l, &l, &p(&[2, 1, 1, 1, 1])), 0);
    }

    #[test]
    fn unit_and_pieri_cases() {
        let e = Partition::empty();
        let l = p(&[3, 1]);
        assert_eq!(lr_coefficient(&e, &l, &l), 1);
        assert_eq!(lr_coefficient(&l, &e, &l), 1);
        // horizontal strip of size 2 added to (1)
        assert_eq!(lr_coefficient(&p(&[1]), &p(&[2]), &p(&[3])), 1);
        assert_eq!(lr_coefficient(&p(&[1]), &p(&[2]), &p(&[2, 1])), 1);
        assert_eq!(lr_coefficient(&p(&[1]), &p(&[2]), &p(&[1, 1, 1])), 0);
    }

    #[test]
    fn symmetric_in_lambda_and_mu() {
        let shapes = [p(&[2, 1]), p(&[3]), p(&[1, 1]), p(&[2, 2]), p(&[3, 1, 1])];
        let targets = [
            p(&[4, 3]),
            p(&[3, 3, 1]),
            p(&[4, 2, 1]),
            p(&[5, 2]),
            p(&[3, 2, 2]),
        ];
        for a in &shapes {
            for b in &shapes {
                for n in &targets {
                    assert_eq!(lr_coefficient(a, b, n), lr_coefficient(b, a, n));
                }
            }
        }
    }
}
