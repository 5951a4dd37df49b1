use std::fmt;

use crate::eps::EpsilonMatrix;
use crate::error::{Error, Result};

/// A word `a_w(1) ⋯ a_w(m)` in the generators of `ℤ₂^ε`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    n: usize,
    letters: Vec<usize>,
}

impl Word {
    pub fn new(n: usize, letters: Vec<usize>) -> Result<Self> {
        if let Some(&v) = letters.iter().find(|&&v| v == 0 || v > n) {
            return Err(Error::IndexOutOfRange { value: v, n });
        }
        Ok(Word { n, letters })
    }

    pub fn empty(n: usize) -> Self {
        Word {
            n,
            letters: Vec::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// `"1,2,1"`; the empty string is the empty word.
    pub fn parse_csv(n: usize, s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Word::empty(n));
        }
        let letters = s
            .split(',')
            .enumerate()
            .map(|(pos, t)| {
                t.trim().parse::<usize>().map_err(|_| Error::Parse {
                    line: 1,
                    column: pos + 1,
                    message: format!("expected a generator number, found `{}`", t.trim()),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Word::new(n, letters)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("e");
        }
        let parts: Vec<String> = self.letters.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

fn commute(eps: &EpsilonMatrix, a: usize, b: usize) -> bool {
    eps.get(a, b)
}

/// Deletes pairs `a_i … a_i` whose intermediate letters all commute with
/// `a_i`, until none is left. The result is a reduced word.
fn cancel(letters: &mut Vec<usize>, eps: &EpsilonMatrix) {
    'outer: loop {
        for q in 0..letters.len() {
            // nearest earlier occurrence reachable through commuting letters
            for p in (0..q).rev() {
                if letters[p] == letters[q] {
                    letters.remove(q);
                    letters.remove(p);
                    continue 'outer;
                }
                if !commute(eps, letters[p], letters[q]) {
                    break;
                }
            }
        }
        return;
    }
}

/// Lexicographically least word reachable by swapping adjacent commuting
/// letters: repeatedly take the smallest letter that can be moved to the
/// front.
fn lex_least(mut letters: Vec<usize>, eps: &EpsilonMatrix) -> Vec<usize> {
    let mut out = Vec::with_capacity(letters.len());
    while !letters.is_empty() {
        let mut best: Option<usize> = None;
        for p in 0..letters.len() {
            let movable = letters[..p].iter().all(|&x| commute(eps, x, letters[p]));
            if movable && best.is_none_or(|b| letters[p] < letters[b]) {
                best = Some(p);
            }
        }
        let p = best.expect("the first letter is always movable");
        out.push(letters.remove(p));
    }
    out
}

/// Cancels all removable pairs, then returns the canonical representative
/// of the commutation class.
pub fn word_reduce(w: &Word, eps: &EpsilonMatrix) -> Word {
    let mut letters = w.letters.clone();
    cancel(&mut letters, eps);
    Word {
        n: w.n,
        letters: lex_least(letters, eps),
    }
}

/// Alias for [`word_reduce`].
pub fn normal_form(w: &Word, eps: &EpsilonMatrix) -> Word {
    word_reduce(w, eps)
}

/// Equality in `ℤ₂^ε`, decided by comparing normal forms.
pub fn word_equal(w1: &Word, w2: &Word, eps: &EpsilonMatrix) -> bool {
    word_reduce(w1, eps) == word_reduce(w2, eps)
}
