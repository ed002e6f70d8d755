//! Half-edge tokens.
//!
//! A token is a nonempty ASCII-alphanumeric name with an optional trailing
//! `+` or `-`. Tokens are case-sensitive. Suffixed tokens come in natural
//! pairs (`3+` / `3-`) which the default pairing uses; unsuffixed tokens are
//! legal but must be paired explicitly.

use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid half-edge token {0:?}")]
pub struct TokenError(pub String);

/// Identifier of a single half-edge.
///
/// Ordering is byte-lexicographic on the token text; note `+` sorts before
/// `-`, so `3+` < `3-`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfEdgeId(String);

impl HalfEdgeId {
    pub fn new(token: impl Into<String>) -> Result<Self, TokenError> {
        let token = token.into();
        let bytes = token.as_bytes();
        let body = match bytes.last() {
            Some(b'+') | Some(b'-') => &bytes[..bytes.len() - 1],
            _ => bytes,
        };
        if body.is_empty() || !body.iter().all(|b| b.is_ascii_alphanumeric()) {
            return Err(TokenError(token));
        }
        Ok(HalfEdgeId(token))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// Token text without the `+`/`-` suffix.
    pub fn base(&self) -> &str {
        match self.0.as_bytes().last() {
            Some(b'+') | Some(b'-') => &self.0[..self.0.len() - 1],
            _ => &self.0,
        }
    }

    pub fn suffix(&self) -> Option<char> {
        match self.0.as_bytes().last() {
            Some(b'+') => Some('+'),
            Some(b'-') => Some('-'),
            _ => None,
        }
    }

    /// The naturally paired token (`3+` for `3-` and vice versa), if suffixed.
    pub fn partner(&self) -> Option<HalfEdgeId> {
        let flipped = match self.suffix()? {
            '+' => '-',
            _ => '+',
        };
        Some(HalfEdgeId(format!("{}{}", self.base(), flipped)))
    }
}

impl fmt::Display for HalfEdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for HalfEdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl FromStr for HalfEdgeId {
    type Err = TokenError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        HalfEdgeId::new(s)
    }
}
