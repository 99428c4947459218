use std::collections::BTreeMap;
use std::fmt;

/// A sparse integer polynomial in two formal variables; `(i, j)` is the
/// exponent pair. Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BivariatePolynomial {
    terms: BTreeMap<(u32, u32), i64>,
}

impl BivariatePolynomial {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_terms(terms: impl IntoIterator<Item = ((u32, u32), i64)>) -> Self {
        let mut out = Self::new();
        for (k, c) in terms {
            out.add(k.0, k.1, c);
        }
        out
    }

    pub fn add(&mut self, i: u32, j: u32, c: i64) {
        if c == 0 {
            return;
        }
        let entry = self.terms.entry((i, j)).or_insert(0);
        *entry += c;
        if *entry == 0 {
            self.terms.remove(&(i, j));
        }
    }

    pub fn coefficient(&self, i: u32, j: u32) -> i64 {
        self.terms.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), i64)> + '_ {
        self.terms.iter().map(|(&k, &c)| (k, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Value at `(1, 1)`: the sum of all coefficients.
    pub fn sum_of_coefficients(&self) -> i64 {
        self.terms.values().sum()
    }

    /// One `(i,j): c` line per term, sorted by exponent pair.
    pub fn to_lines(&self) -> Vec<String> {
        self.terms
            .iter()
            .map(|((i, j), c)| format!("({i},{j}): {c}"))
            .collect()
    }
}

impl fmt::Display for BivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for line in self.to_lines() {
            writeln!(f, "{line}")?;
        }
        Ok(())
    }
}
