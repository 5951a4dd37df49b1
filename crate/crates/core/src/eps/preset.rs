use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

use super::EpsilonMatrix;

// Fixed patterns, stored verbatim.

const PAIRS_INDEP: [[u8; 4]; 4] = [[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]];

const PAIRS_FREE: [[u8; 4]; 4] = [[0, 0, 1, 1], [0, 0, 1, 1], [1, 1, 0, 0], [1, 1, 0, 0]];

const CYCLE5: [[u8; 5]; 5] = [
    [0, 0, 1, 1, 0],
    [0, 0, 0, 1, 1],
    [1, 0, 0, 0, 1],
    [1, 1, 0, 0, 0],
    [0, 1, 1, 0, 0],
];

const TRIVIAL6: [[u8; 6]; 6] = [
    [0, 0, 1, 0, 0, 0],
    [0, 0, 0, 0, 1, 0],
    [1, 0, 0, 0, 0, 1],
    [0, 0, 0, 0, 1, 1],
    [0, 1, 0, 1, 0, 1],
    [0, 0, 1, 1, 1, 0],
];

/// Named commutation patterns.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Preset {
    /// Every pair commutes: classical independence.
    Comm(usize),
    /// No pair commutes: free independence.
    Free(usize),
    /// `n` mutually commuting variables free from `m` mutually free ones.
    Block(usize, usize),
    /// `{x1,x2}` and `{x3,x4}` independent pairs, free from each other (`ex-d`).
    PairsIndep,
    /// `{x1,x2}` and `{x3,x4}` free pairs, independent of each other (`ex-e`).
    PairsFree,
    /// The 5-cycle of free neighbours (`ex-f`).
    Cycle5,
    /// A 6-vertex graph with trivial automorphism group.
    Trivial6,
}

impl Preset {
    pub fn build(self) -> Result<EpsilonMatrix> {
        fn fixed<const N: usize>(rows: &[[u8; N]; N]) -> Result<EpsilonMatrix> {
            let rows: Vec<Vec<u8>> = rows.iter().map(|r| r.to_vec()).collect();
            EpsilonMatrix::new(N, &rows)
        }
        match self {
            Preset::Comm(n) => EpsilonMatrix::from_fn(n, |_, _| true),
            Preset::Free(n) => EpsilonMatrix::from_fn(n, |_, _| false),
            Preset::Block(n, m) => EpsilonMatrix::from_fn(n + m, |i, j| i <= n && j <= n),
            Preset::PairsIndep => fixed(&PAIRS_INDEP),
            Preset::PairsFree => fixed(&PAIRS_FREE),
            Preset::Cycle5 => fixed(&CYCLE5),
            Preset::Trivial6 => fixed(&TRIVIAL6),
        }
    }

    /// Resolves a name plus optional size parameters. Accepted spellings:
    /// `comm`, `comm(3)`, `comm:3`, `block(2,3)`, `block:2,3`, `ex-d`,
    /// `pairs-indep`, and so on. `n`/`m` fill in sizes the name leaves out.
    pub fn parse(name: &str, n: Option<usize>, m: Option<usize>) -> Result<Self> {
        let unknown = || Error::UnknownPreset(name.to_string());
        let name = name.trim();
        let (base, args) = match name.find(['(', ':']) {
            Some(pos) => {
                let rest = name[pos + 1..].trim_end_matches(')');
                let args: Vec<usize> = rest
                    .split(',')
                    .map(|a| a.trim().parse().map_err(|_| unknown()))
                    .collect::<Result<_>>()?;
                (&name[..pos], args)
            }
            None => (name, Vec::new()),
        };
        let size = |k: usize, fallback: Option<usize>| -> Result<usize> {
            args.get(k)
                .copied()
                .or(fallback)
                .filter(|&s| s > 0)
                .ok_or_else(unknown)
        };
        let p = match base.to_ascii_lowercase().as_str() {
            "comm" => Preset::Comm(size(0, n)?),
            "free" => Preset::Free(size(0, n)?),
            "block" => Preset::Block(size(0, n)?, size(1, m)?),
            "ex-d" | "pairs-indep" => Preset::PairsIndep,
            "ex-e" | "pairs-free" => Preset::PairsFree,
            "ex-f" | "cycle5" => Preset::Cycle5,
            "trivial6" => Preset::Trivial6,
            _ => return Err(unknown()),
        };
        Ok(p)
    }

    /// Every named preset with sizes up to `max_n` (fixed patterns larger
    /// than `max_n` are left out).
    pub fn catalogue(max_n: usize) -> Vec<Preset> {
        let mut v = Vec::new();
        for n in 1..=max_n {
            v.push(Preset::Comm(n));
            v.push(Preset::Free(n));
        }
        for total in 2..=max_n {
            for n in 1..total {
                v.push(Preset::Block(n, total - n));
            }
        }
        for (p, size) in [
            (Preset::PairsIndep, 4),
            (Preset::PairsFree, 4),
            (Preset::Cycle5, 5),
            (Preset::Trivial6, 6),
        ] {
            if size <= max_n {
                v.push(p);
            }
        }
        v
    }
}

impl fmt::Display for Preset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Preset::Comm(n) => format!("comm({n})"),
            Preset::Free(n) => format!("free({n})"),
            Preset::Block(n, m) => format!("block({n},{m})"),
            Preset::PairsIndep => "ex-d".into(),
            Preset::PairsFree => "ex-e".into(),
            Preset::Cycle5 => "ex-f".into(),
            Preset::Trivial6 => "trivial6".into(),
        };
        f.pad(&name)
    }
}

impl FromStr for Preset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Preset::parse(s, None, None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn free3_is_zero() {
        let e = Preset::Free(3).build().unwrap();
        assert_eq!(e.rows(), vec![vec![0; 3]; 3]);
    }

    #[test]
    fn cycle5_rows() {
        let e = Preset::Cycle5.build().unwrap();
        assert_eq!(
            e.rows(),
            vec![
                vec![0, 0, 1, 1, 0],
                vec![0, 0, 0, 1, 1],
                vec![1, 0, 0, 0, 1],
                vec![1, 1, 0, 0, 0],
                vec![0, 1, 1, 0, 0],
            ]
        );
    }

    #[test]
    fn trivial6_first_row() {
        let e = Preset::Trivial6.build().unwrap();
        assert_eq!(e.rows()[0], vec![0, 0, 1, 0, 0, 0]);
    }

    #[test]
    fn block_pattern() {
        let e = Preset::Block(2, 2).build().unwrap();
        assert_eq!(
            e.rows(),
            vec![
                vec![0, 1, 0, 0],
                vec![1, 0, 0, 0],
                vec![0, 0, 0, 0],
                vec![0, 0, 0, 0],
            ]
        );
    }

    #[test]
    fn comm_and_free_survive_validation() {
        for n in 1..=10 {
            for p in [Preset::Comm(n), Preset::Free(n)] {
                let e = p.build().unwrap();
                assert_eq!(EpsilonMatrix::new(n, &e.rows()).unwrap(), e);
            }
        }
    }

    #[test]
    fn parse_spellings() {
        assert_eq!(
            Preset::parse("comm", Some(3), None).unwrap(),
            Preset::Comm(3)
        );
        assert_eq!(
            Preset::parse("comm(4)", None, None).unwrap(),
            Preset::Comm(4)
        );
        assert_eq!(
            Preset::parse("block:2,3", None, None).unwrap(),
            Preset::Block(2, 3)
        );
        assert_eq!(
            Preset::parse("ex-d", None, None).unwrap(),
            Preset::PairsIndep
        );
        assert_eq!(
            Preset::parse("pairs-free", None, None).unwrap(),
            Preset::PairsFree
        );
        assert!(matches!(
            Preset::parse("comm", None, None),
            Err(Error::UnknownPreset(_))
        ));
        assert!(matches!(
            Preset::parse("bogus", None, None),
            Err(Error::UnknownPreset(_))
        ));
    }
}
