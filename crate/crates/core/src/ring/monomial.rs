use std::cmp::Ordering;
use std::fmt;

use crate::{Error, Result, Subset};

/// An ordered list of variable names. Index 0 is the largest variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VariableSet {
    labels: Vec<String>,
}

impl VariableSet {
    /// Variables labelled `x1, …, x{count}`.
    pub fn new(count: usize) -> Self {
        VariableSet {
            labels: (1..=count).map(|i| format!("x{i}")).collect(),
        }
    }

    pub fn with_labels<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let mut seen = std::collections::HashSet::new();
        for l in &labels {
            if l.is_empty() || l.chars().any(char::is_whitespace) {
                return Err(Error::InvalidArgument(format!("bad variable label {l:?}")));
            }
            if !seen.insert(l.as_str()) {
                return Err(Error::InvalidArgument(format!("duplicate variable label {l}")));
            }
        }
        Ok(VariableSet { labels })
    }

    pub fn count(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        if m.is_one() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        for (i, &e) in m.exponents().iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(self.labels[i].clone()),
                _ => parts.push(format!("{}^{e}", self.labels[i])),
            }
        }
        parts.join("*")
    }

    pub fn format_subset(&self, s: Subset) -> String {
        let names: Vec<&str> = s.iter().map(|v| self.label(v)).collect();
        format!("{{{}}}", names.join(","))
    }
}

/// An exponent vector. Its length is the ambient variable count.
#[derive(Clone, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(transparent)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn one(nvars: usize) -> Self {
        Monomial { exps: vec![0; nvars] }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        Monomial { exps }
    }

    /// The squarefree monomial with the given support.
    pub fn from_support(nvars: usize, vars: impl IntoIterator<Item = usize>) -> Self {
        let mut exps = vec![0; nvars];
        for v in vars {
            exps[v] = 1;
        }
        Monomial { exps }
    }

    pub fn from_subset(nvars: usize, s: Subset) -> Self {
        Self::from_support(nvars, s.iter())
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i)
    }

    /// Support as a packed subset; `None` beyond 64 variables.
    pub fn support_subset(&self) -> Option<Subset> {
        if self.exps.len() > 64 {
            return None;
        }
        Some(Subset::from_indices(self.support()))
    }

    fn check(&self, other: &Monomial) -> Result<()> {
        if self.exps.len() != other.exps.len() {
            return Err(Error::AmbientMismatch {
                left: self.exps.len(),
                right: other.exps.len(),
            });
        }
        Ok(())
    }

    pub fn divides(&self, other: &Monomial) -> Result<bool> {
        self.check(other)?;
        Ok(self.divides_unchecked(other))
    }

    pub(crate) fn divides_unchecked(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Result<Monomial> {
        self.check(other)?;
        Ok(self.zip_with(other, u32::max))
    }

    pub fn gcd(&self, other: &Monomial) -> Result<Monomial> {
        self.check(other)?;
        Ok(self.zip_with(other, u32::min))
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        self.check(other)?;
        Ok(self.zip_with(other, |a, b| {
            a.checked_add(b).expect("exponent overflow")
        }))
    }

    /// `self / gcd(self, f)`: the generator of `(self) : f`.
    pub fn colon(&self, f: &Monomial) -> Result<Monomial> {
        self.check(f)?;
        Ok(self.zip_with(f, u32::saturating_sub))
    }

    pub(crate) fn zip_with(&self, other: &Monomial, op: impl Fn(u32, u32) -> u32) -> Monomial {
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(&a, &b)| op(a, b)).collect(),
        }
    }

    /// Rename variable `i` to `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> Monomial {
        let mut exps = vec![0; self.exps.len()];
        for (i, &e) in self.exps.iter().enumerate() {
            exps[perm[i]] = e;
        }
        Monomial { exps }
    }

    /// Lexicographic comparison with variable 0 largest.
    pub fn cmp_lex(&self, other: &Monomial) -> Ordering {
        self.exps.cmp(&other.exps)
    }

    /// Canonical generator order: ascending degree, then descending lex.
    pub fn cmp_canonical(&self, other: &Monomial) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.cmp_lex(self))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps)
    }
}
