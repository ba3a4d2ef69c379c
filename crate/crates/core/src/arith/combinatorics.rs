//! Binomials and lexicographically ordered subsets.

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// All k-subsets of 0..n, ascending, in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::with_capacity(binomial(n, k));
    if k > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        // advance the rightmost position that can still move
        let mut i = k;
        while i > 0 && cur[i - 1] == n - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return out;
        }
        cur[i - 1] += 1;
        for j in i..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// Position of an ascending k-subset of 0..n in the order of [`subsets`].
pub fn subset_rank(n: usize, s: &[usize]) -> usize {
    let k = s.len();
    let mut rank = 0;
    let mut next = 0;
    for (i, &x) in s.iter().enumerate() {
        for v in next..x {
            rank += binomial(n - 1 - v, k - 1 - i);
        }
        next = x + 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranks_match_listing() {
        for n in 0..7 {
            for k in 0..=n {
                let all = subsets(n, k);
                assert_eq!(all.len(), binomial(n, k));
                for (i, s) in all.iter().enumerate() {
                    assert_eq!(subset_rank(n, s), i);
                }
            }
        }
        assert_eq!(subsets(4, 2)[..3], [vec![0, 1], vec![0, 2], vec![0, 3]]);
        assert!(subsets(2, 3).is_empty());
    }
}
