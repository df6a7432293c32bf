//! Tree and word counts against closed recurrences.

use rbdend::trees::{enumerate_binary, enumerate_planar, filter_words, tree_images, TreeFamily};
use rbdend::Alphabet;

const CAP: usize = 10_000_000;

/// `C_0 = 1`, `C_{n+1} = Σ C_i C_{n-i}`.
fn catalan(n: usize) -> Vec<u64> {
    let mut c = vec![1u64];
    for m in 1..=n {
        c.push((0..m).map(|i| c[i] * c[m - 1 - i]).sum());
    }
    c
}

/// Planar trees with `n + 1` leaves and no unary vertices:
/// `(n + 1) s_n = 3(2n − 1) s_{n−1} − (n − 2) s_{n−2}` with `s_0 = s_1 = 1`.
fn super_catalan(n: usize) -> Vec<u64> {
    let mut s = vec![1i64, 1];
    for m in 2..=n as i64 {
        let next = (3 * (2 * m - 1) * s[m as usize - 1] - (m - 2) * s[m as usize - 2]) / (m + 1);
        s.push(next);
    }
    s.truncate(n + 1);
    s.into_iter().map(|v| v as u64).collect()
}

#[test]
fn recurrences_themselves() {
    assert_eq!(catalan(6), [1, 1, 2, 5, 14, 42, 132]);
    assert_eq!(super_catalan(6), [1, 1, 3, 11, 45, 197, 903]);
}

#[test]
fn undecorated_counts() {
    let a = Alphabet::new(["x"]).unwrap();
    let c = catalan(6);
    let s = super_catalan(6);
    for n in 0..=6 {
        assert_eq!(enumerate_binary(n, &a, CAP).unwrap().len() as u64, c[n], "binary {n}");
        assert_eq!(enumerate_planar(n, &a, CAP).unwrap().len() as u64, s[n], "planar {n}");
    }
}

#[test]
fn decorated_counts() {
    // a tree with n + 1 leaves carries n decorations in both families
    for k in 1..=3u64 {
        let names: Vec<String> = (0..k).map(|i| format!("g{i}")).collect();
        let a = Alphabet::new(&names).unwrap();
        let (c, s) = (catalan(4), super_catalan(4));
        for n in 0..=3 {
            let pow = k.pow(n as u32);
            assert_eq!(enumerate_binary(n, &a, CAP).unwrap().len() as u64, c[n] * pow);
            assert_eq!(enumerate_planar(n, &a, CAP).unwrap().len() as u64, s[n] * pow);
        }
    }
}

#[test]
fn word_filters_agree_with_tree_images() {
    let a = Alphabet::new(["x", "y"]).unwrap();
    let (c, s) = (catalan(4), super_catalan(4));
    for n in 1..=4 {
        let pow = 2u64.pow(n as u32);
        let di = filter_words(TreeFamily::Binary, n, &a, CAP).unwrap();
        let tri = filter_words(TreeFamily::Planar, n, &a, CAP).unwrap();
        assert_eq!(di.len() as u64, c[n] * pow, "diwords {n}");
        assert_eq!(tri.len() as u64, s[n] * pow, "triwords {n}");
        assert_eq!(di, tree_images(TreeFamily::Binary, n, &a, CAP).unwrap());
        assert_eq!(tri, tree_images(TreeFamily::Planar, n, &a, CAP).unwrap());
    }
}

#[test]
fn sorted_and_distinct() {
    let a = Alphabet::new(["x", "y"]).unwrap();
    let trees = enumerate_planar(3, &a, CAP).unwrap();
    assert!(trees.windows(2).all(|p| p[0] < p[1]));
    let trees = enumerate_binary(3, &a, CAP).unwrap();
    assert!(trees.windows(2).all(|p| p[0] < p[1]));
}

#[test]
fn enumeration_cap() {
    let a = Alphabet::new(["x", "y"]).unwrap();
    assert!(enumerate_planar(4, &a, 100).is_err());
}
