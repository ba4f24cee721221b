//! Integer partitions.

/// Partitions of `n` into parts `>= min_part`, each listed with parts in
/// nonincreasing order, in decreasing lexicographic order.
///
/// `partitions(0, _)` is the single empty partition.
pub fn partitions(n: usize, min_part: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(n, n, min_part.max(1), &mut current, &mut out);
    out
}

fn fill(
    left: usize,
    max_part: usize,
    min_part: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if left == 0 {
        out.push(current.clone());
        return;
    }
    for part in (min_part..=max_part.min(left)).rev() {
        current.push(part);
        fill(left - part, part, min_part, current, out);
        current.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        assert_eq!(partitions(0, 2), vec![Vec::<usize>::new()]);
        assert_eq!(partitions(1, 2), Vec::<Vec<usize>>::new());
        assert_eq!(partitions(4, 2), vec![vec![4], vec![2, 2]]);
        assert_eq!(
            partitions(4, 1),
            vec![
                vec![4],
                vec![3, 1],
                vec![2, 2],
                vec![2, 1, 1],
                vec![1, 1, 1, 1]
            ]
        );
    }

    #[test]
    fn partition_counts() {
        let p: Vec<usize> = (0..=10).map(|n| partitions(n, 1).len()).collect();
        assert_eq!(p, [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    }
}
