//! Output of the factorizers.

use std::fmt;

/// One s-factor: a fresh character, or a copy of `len` characters starting
/// at the 1-based position `src` (the copy may overlap the factor itself).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Factor<T = u8> {
    Literal(T),
    Ref { src: usize, len: usize },
}

impl<T> Factor<T> {
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        match self {
            Factor::Literal(_) => 1,
            Factor::Ref { len, .. } => *len,
        }
    }

    pub fn is_literal(&self) -> bool {
        matches!(self, Factor::Literal(_))
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Factorization<T = u8> {
    pub factors: Vec<Factor<T>>,
}

impl<T> Factorization<T> {
    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn lengths(&self) -> Vec<usize> {
        self.factors.iter().map(Factor::len).collect()
    }

    /// Total number of characters covered.
    pub fn text_len(&self) -> usize {
        self.factors.iter().map(Factor::len).sum()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Factor<T>> {
        self.factors.iter()
    }
}

impl<T: Copy + Eq + fmt::Debug> Factorization<T> {
    /// Checks coverage of `text` and that every reference is a genuine
    /// earlier occurrence. Literals must be characters not seen before.
    /// Greediness is not checked.
    pub fn validate(&self, text: &[T]) -> Result<(), FactorError> {
        let mut start = 0;
        for (idx, f) in self.factors.iter().enumerate() {
            let len = f.len();
            if len == 0 || start + len > text.len() {
                return Err(FactorError::Coverage { factor: idx });
            }
            match *f {
                Factor::Literal(c) => {
                    if text[start] != c || text[..start].contains(&c) {
                        return Err(FactorError::BadLiteral { factor: idx });
                    }
                }
                Factor::Ref { src, len } => {
                    let ok = src >= 1 && src - 1 < start && (0..len).all(|t| text[src - 1 + t] == text[start + t]);
                    if !ok {
                        return Err(FactorError::BadReference { factor: idx, src, len });
                    }
                }
            }
            start += len;
        }
        if start != text.len() {
            return Err(FactorError::Coverage { factor: self.factors.len() });
        }
        Ok(())
    }
}

impl<T> FromIterator<Factor<T>> for Factorization<T> {
    fn from_iter<I: IntoIterator<Item = Factor<T>>>(iter: I) -> Self {
        Factorization { factors: iter.into_iter().collect() }
    }
}

impl<'a, T> IntoIterator for &'a Factorization<T> {
    type Item = &'a Factor<T>;
    type IntoIter = std::slice::Iter<'a, Factor<T>>;

    fn into_iter(self) -> Self::IntoIter {
        self.factors.iter()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FactorError {
    #[error("factors do not tile the text (at factor {factor})")]
    Coverage { factor: usize },
    #[error("factor {factor} is a literal of an already seen character")]
    BadLiteral { factor: usize },
    #[error("factor {factor}: ({src},{len}) is not an earlier occurrence")]
    BadReference { factor: usize, src: usize, len: usize },
}
