//! Binary words: primitivity, least rotations and Lyndon enumeration.

/// `true` when `w` is not a power `u^k` of a shorter word (`k ≥ 2`).
pub fn is_primitive<T: PartialEq>(w: &[T]) -> bool {
    let n = w.len();
    n > 0 && (1..n).filter(|p| n % p == 0).all(|p| (0..n).any(|i| w[i] != w[(i + p) % n]))
}

/// Smallest period `p` dividing `len` such that `w` is `len/p` copies of its
/// first `p` letters.
pub fn primitive_period<T: PartialEq>(w: &[T]) -> usize {
    let n = w.len();
    (1..=n).find(|&p| n % p == 0 && (0..n).all(|i| w[i] == w[(i + p) % n])).unwrap_or(n)
}

/// Offset `k` such that rotating `w` left by `k` gives the least rotation
/// under `cmp`; the smallest such offset on ties.
pub fn least_rotation_by<T>(w: &[T], mut cmp: impl FnMut(&T, &T) -> std::cmp::Ordering) -> usize {
    let n = w.len();
    let mut best = 0;
    for k in 1..n {
        let ord = (0..n)
            .map(|i| cmp(&w[(k + i) % n], &w[(best + i) % n]))
            .find(|o| o.is_ne())
            .unwrap_or(std::cmp::Ordering::Equal);
        if ord.is_lt() {
            best = k;
        }
    }
    best
}

pub fn rotate_left<T: Clone>(w: &[T], k: usize) -> Vec<T> {
    let n = w.len();
    (0..n).map(|i| w[(i + k) % n].clone()).collect()
}

/// Least rotation of a word over an ordered alphabet.
pub fn least_rotation<T: Ord + Clone>(w: &[T]) -> Vec<T> {
    rotate_left(w, least_rotation_by(w, T::cmp))
}

/// Binary Lyndon words of exact length `d`, in lexicographic order.
pub fn lyndon_words(d: usize) -> Vec<String> {
    let mut out = Vec::new();
    if d > 0 {
        duval(d, &mut out);
    }
    out
}

/// Duval's iterative generation of all Lyndon words of length ≤ n, keeping
/// those of length exactly n.
fn duval(n: usize, out: &mut Vec<String>) {
    let mut w: Vec<u8> = vec![0];
    loop {
        if w.len() == n {
            out.push(w.iter().map(|&x| char::from(b'0' + x)).collect());
        }
        let m = w.len();
        while w.len() < n {
            let c = w[w.len() - m];
            w.push(c);
        }
        while let Some(&1) = w.last() {
            w.pop();
        }
        match w.last_mut() {
            Some(x) => *x += 1,
            None => break,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute(d: usize) -> Vec<String> {
        let mut out: Vec<String> = (0..(1u32 << d))
            .map(|c| (0..d).map(|k| if c >> (d - 1 - k) & 1 == 1 { '1' } else { '0' }).collect::<String>())
            .filter(|s| {
                let b = s.as_bytes();
                is_primitive(b) && least_rotation(b) == b
            })
            .collect();
        out.sort();
        out
    }

    #[test]
    fn small_cases() {
        assert_eq!(lyndon_words(1), vec!["0", "1"]);
        assert_eq!(lyndon_words(2), vec!["01"]);
        assert_eq!(lyndon_words(3), vec!["001", "011"]);
        assert_eq!(lyndon_words(6).len(), 9);
    }

    #[test]
    fn matches_brute_force() {
        for d in 1..=12 {
            assert_eq!(lyndon_words(d), brute(d), "d={d}");
        }
    }

    #[test]
    fn rotations_and_periods() {
        assert_eq!(least_rotation(b"10"), b"01".to_vec());
        assert_eq!(least_rotation(b"0110"), b"0011".to_vec());
        assert!(!is_primitive(b"0101"));
        assert!(is_primitive(b"011"));
        assert_eq!(primitive_period(b"010010"), 3);
    }
}
