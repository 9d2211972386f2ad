//! Pair codes and signed-integer embeddings.
//!
//! Pairs of naturals are coded with the Cantor pairing function
//!
//! ```text
//! (a, b) -> (a + b) * (a + b + 1) / 2 + b
//! ```
//!
//! which is a bijection `N x N -> N` and strictly increasing in both
//! arguments. Points of `Z x Z` are first mapped to naturals with zigzag
//! encoding (`0, -1, 1, -2, 2, ...` to `0, 1, 2, 3, 4, ...`).

use crate::error::{Error, Result};

/// Cantor code of `(a, b)`.
pub fn pair_encode(a: u64, b: u64) -> Result<u64> {
    let s = a.checked_add(b).ok_or(Error::InputTooLarge(a, b))?;
    let s1 = s.checked_add(1).ok_or(Error::InputTooLarge(a, b))?;
    // one of s, s+1 is even, halve it before multiplying
    let tri = if s % 2 == 0 {
        (s / 2).checked_mul(s1)
    } else {
        s.checked_mul(s1 / 2)
    };
    tri.and_then(|t| t.checked_add(b))
        .ok_or(Error::InputTooLarge(a, b))
}

/// Inverse of [`pair_encode`].
pub fn pair_decode(code: u64) -> (u64, u64) {
    let w = diagonal_of(code);
    let t = triangular(w);
    let b = code - t;
    (w - b, b)
}

fn triangular(w: u64) -> u64 {
    let w = w as u128;
    (w * (w + 1) / 2) as u64
}

// largest w with w(w+1)/2 <= code
fn diagonal_of(code: u64) -> u64 {
    let disc = 8 * code as u128 + 1;
    let mut r = (disc as f64).sqrt() as u128;
    while r * r > disc {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= disc {
        r += 1;
    }
    ((r - 1) / 2) as u64
}

/// Zigzag embedding of a signed integer into the naturals.
pub fn zigzag(n: i64) -> u64 {
    ((n << 1) ^ (n >> 63)) as u64
}

/// Inverse of [`zigzag`].
pub fn unzigzag(n: u64) -> i64 {
    ((n >> 1) as i64) ^ -((n & 1) as i64)
}

/// Code of the lattice point `(x, y)`.
pub fn point_encode(x: i64, y: i64) -> Result<u64> {
    pair_encode(zigzag(x), zigzag(y))
}

/// Lattice point coded by `code`.
pub fn point_decode(code: u64) -> (i64, i64) {
    let (a, b) = pair_decode(code);
    (unzigzag(a), unzigzag(b))
}
