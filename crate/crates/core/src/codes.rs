//! A small gallery of built-in codes used as fixtures and demos.

use alloc::vec::Vec;

use crate::code::LinearCode;
use crate::matrix::BinaryMatrix;
use crate::word::Word;

/// Names of all built-in codes, as accepted by [`by_name`].
pub const BUILTIN_NAMES: [&str; 5] = ["example1", "hamming7", "rep3", "golay23", "bch21"];

/// Looks up a built-in code by name; see [`BUILTIN_NAMES`].
#[must_use]
pub fn by_name(name: &str) -> Option<LinearCode> {
    match name {
        "example1" => Some(example1()),
        "hamming7" => Some(hamming7()),
        "rep3" => Some(rep3()),
        "golay23" => Some(golay23()),
        "bch21" => Some(bch21()),
        _ => None,
    }
}

/// A `[10, 4, 4]` code with a rich coset-leader landscape: 64 cosets carrying
/// 118 leaders, covering radius 3, and cosets with up to four leaders. The
/// standard worked example throughout this crate's tests.
#[must_use]
pub fn example1() -> LinearCode {
    LinearCode::from_parity_check_strs(&[
        "1000100000",
        "1011010000",
        "1101001000",
        "1110000100",
        "1111000010",
        "1111000001",
    ])
    .expect("static matrix is well-formed")
}

/// The `[7, 4, 3]` Hamming code: perfect with `t = 1`, so every coset has a
/// unique leader of weight at most 1.
#[must_use]
pub fn hamming7() -> LinearCode {
    LinearCode::from_parity_check_strs(&["0001111", "0110011", "1010101"])
        .expect("static matrix is well-formed")
}

/// The `[3, 1, 3]` repetition code, the smallest interesting fixture.
#[must_use]
pub fn rep3() -> LinearCode {
    LinearCode::from_parity_check_strs(&["110", "011"]).expect("static matrix is well-formed")
}

/// The `[23, 12, 7]` binary Golay code (cyclic, perfect, `t = 3`), via its
/// degree-11 generator polynomial.
#[must_use]
pub fn golay23() -> LinearCode {
    cyclic(23, &[0, 1, 5, 6, 7, 9, 11])
}

/// A `[21, 12, 5]` binary BCH code (cyclic, `t = 2`), via its degree-9
/// generator polynomial.
#[must_use]
pub fn bch21() -> LinearCode {
    cyclic(21, &[0, 1, 4, 5, 7, 8, 9])
}

/// The cyclic code of length `n` generated by the polynomial with the given
/// exponents (e.g. `[0, 1, 3]` for `1 + x + x^3`). The exponents must include
/// the leading degree, which must divide into a positive dimension
/// `k = n - deg`.
fn cyclic(n: u32, generator_exponents: &[u32]) -> LinearCode {
    let degree = *generator_exponents.iter().max().expect("nonempty generator");
    let k = n - degree;
    let generator_rows: Vec<Word> = (0..k)
        .map(|shift| {
            let support: Vec<u32> =
                generator_exponents.iter().map(|&d| d + shift + 1).collect();
            Word::from_support(n, &support)
        })
        .collect();
    let g = BinaryMatrix::from_rows(generator_rows).expect("k >= 1 rows");
    let h = BinaryMatrix::from_rows(g.null_space_basis()).expect("degree >= 1 parity rows");
    LinearCode::from_parity_check(&h).expect("cyclic construction is nondegenerate")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn frozen_parameters() {
        for (code, n, k, d) in [
            (example1(), 10, 4, 4),
            (hamming7(), 7, 4, 3),
            (rep3(), 3, 1, 3),
            (golay23(), 23, 12, 7),
            (bch21(), 21, 12, 5),
        ] {
            assert_eq!((code.n(), code.k()), (n, k));
            assert_eq!(code.min_distance().unwrap(), d);
        }
    }

    #[test]
    fn lookup_by_name() {
        for name in BUILTIN_NAMES {
            assert!(by_name(name).is_some());
        }
        assert_eq!(by_name("nosuch"), None);
        assert_eq!(by_name("golay23").unwrap(), golay23());
    }

    #[test]
    fn cyclic_codes_are_cyclic() {
        for code in [golay23(), bch21()] {
            let n = code.n();
            // The cyclic shift of the generator's top row stays a codeword
            // (wrap-around shift of an arbitrary codeword).
            for row in 0..code.generator().rows() {
                let w = code.generator().row(row);
                let rotated: Vec<u32> =
                    w.support().map(|i| if i == n { 1 } else { i + 1 }).collect();
                assert!(code.is_codeword(&Word::from_support(n, &rotated)));
            }
        }
    }
}
