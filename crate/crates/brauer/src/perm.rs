//! Finite permutations over a shared ground set of half-edges.
//!
//! A [`GroundSet`] holds the tokens sorted; permutations store images by
//! index into that ordering. All permutations combined by [`Permutation::compose`]
//! must live over ground sets with identical token content.

use crate::token::HalfEdgeId;
use std::fmt;
use std::sync::Arc;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PermError {
    #[error("duplicate token {0}")]
    DuplicateToken(String),
    #[error("unknown half-edge {0}")]
    UnknownToken(String),
    #[error("token {0} appears more than once in the cycles")]
    RepeatedInCycles(String),
    #[error("malformed cycle notation: {0}")]
    CycleSyntax(String),
}

/// Sorted, duplicate-free set of half-edge tokens.
#[derive(Debug, PartialEq, Eq)]
pub struct GroundSet {
    tokens: Vec<HalfEdgeId>,
}

impl GroundSet {
    pub fn new(mut tokens: Vec<HalfEdgeId>) -> Result<Arc<Self>, PermError> {
        tokens.sort();
        for pair in tokens.windows(2) {
            if pair[0] == pair[1] {
                return Err(PermError::DuplicateToken(pair[0].as_str().to_owned()));
            }
        }
        Ok(Arc::new(GroundSet { tokens }))
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &HalfEdgeId> {
        self.tokens.iter()
    }

    pub fn contains(&self, h: &HalfEdgeId) -> bool {
        self.index_of(h).is_some()
    }

    /// Position of a token in the sorted order.
    pub fn index_of(&self, h: &HalfEdgeId) -> Option<usize> {
        self.tokens.binary_search(h).ok()
    }

    pub fn token(&self, idx: usize) -> &HalfEdgeId {
        &self.tokens[idx]
    }

    pub fn tokens(&self) -> &[HalfEdgeId] {
        &self.tokens
    }
}

/// Bijection of a ground set onto itself.
#[derive(Clone)]
pub struct Permutation {
    ground: Arc<GroundSet>,
    map: Vec<u32>,
}

impl PartialEq for Permutation {
    fn eq(&self, other: &Self) -> bool {
        self.map == other.map && self.same_ground(other)
    }
}

impl Eq for Permutation {}

impl Permutation {
    pub fn identity(ground: Arc<GroundSet>) -> Self {
        let map = (0..ground.len() as u32).collect();
        Permutation { ground, map }
    }

    /// Builds a permutation from disjoint cycles; omitted tokens are fixed.
    pub fn from_cycles(
        ground: &Arc<GroundSet>,
        cycles: &[Vec<HalfEdgeId>],
    ) -> Result<Self, PermError> {
        let mut map: Vec<u32> = (0..ground.len() as u32).collect();
        let mut seen = vec![false; ground.len()];
        for cycle in cycles {
            let idx: Vec<usize> = cycle
                .iter()
                .map(|h| {
                    ground
                        .index_of(h)
                        .ok_or_else(|| PermError::UnknownToken(h.as_str().to_owned()))
                })
                .collect::<Result<_, _>>()?;
            for &i in &idx {
                if seen[i] {
                    return Err(PermError::RepeatedInCycles(
                        ground.token(i).as_str().to_owned(),
                    ));
                }
                seen[i] = true;
            }
            for k in 0..idx.len() {
                map[idx[k]] = idx[(k + 1) % idx.len()] as u32;
            }
        }
        Ok(Permutation {
            ground: Arc::clone(ground),
            map,
        })
    }

    /// Parses classic cycle notation like `(1+ 2+)(1- 2-)`. Whitespace between
    /// cycles is allowed; an empty string is the identity.
    pub fn from_cycle_str(ground: &Arc<GroundSet>, text: &str) -> Result<Self, PermError> {
        let cycles = parse_cycles(text).map_err(PermError::CycleSyntax)?;
        let cycles: Vec<Vec<HalfEdgeId>> = cycles
            .into_iter()
            .map(|cycle| {
                cycle
                    .into_iter()
                    .map(|tok| {
                        HalfEdgeId::new(tok.as_str()).map_err(|_| PermError::UnknownToken(tok))
                    })
                    .collect()
            })
            .collect::<Result<_, _>>()?;
        Permutation::from_cycles(ground, &cycles)
    }

    pub fn ground(&self) -> &Arc<GroundSet> {
        &self.ground
    }

    pub fn same_ground(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.ground, &other.ground) || self.ground == other.ground
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn apply_idx(&self, idx: usize) -> usize {
        self.map[idx] as usize
    }

    pub fn apply(&self, h: &HalfEdgeId) -> HalfEdgeId {
        let idx = self
            .ground
            .index_of(h)
            .unwrap_or_else(|| panic!("half-edge {h} not in ground set"));
        self.ground.token(self.apply_idx(idx)).clone()
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u32; self.map.len()];
        for (i, &j) in self.map.iter().enumerate() {
            inv[j as usize] = i as u32;
        }
        Permutation {
            ground: Arc::clone(&self.ground),
            map: inv,
        }
    }

    /// `self . inner`: applies `inner` first. Panics if the ground sets differ.
    pub fn compose(&self, inner: &Self) -> Self {
        assert!(
            self.same_ground(inner),
            "composing permutations over different ground sets"
        );
        let map = inner.map.iter().map(|&j| self.map[j as usize]).collect();
        Permutation {
            ground: Arc::clone(&self.ground),
            map,
        }
    }

    pub fn pow(&self, exp: i64) -> Self {
        let base = if exp < 0 {
            self.inverse()
        } else {
            self.clone()
        };
        let mut out = Permutation::identity(Arc::clone(&self.ground));
        for _ in 0..exp.unsigned_abs() {
            out = base.compose(&out);
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &j)| i as u32 == j)
    }

    pub fn is_involution(&self) -> bool {
        self.map
            .iter()
            .enumerate()
            .all(|(i, &j)| self.map[j as usize] as usize == i)
    }

    pub fn fixed_points(&self) -> Vec<HalfEdgeId> {
        self.map
            .iter()
            .enumerate()
            .filter(|&(i, &j)| i as u32 == j)
            .map(|(i, _)| self.ground.token(i).clone())
            .collect()
    }

    pub fn is_fixed_point_free(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &j)| i as u32 != j)
    }

    /// Orbit partition; classes start at their least member and are listed in
    /// order of least member.
    pub fn orbits(&self) -> OrbitPartition {
        let n = self.map.len();
        let mut seen = vec![false; n];
        let mut classes = Vec::new();
        let mut class_index = vec![0usize; n];
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut class = Vec::new();
            let mut cur = start;
            loop {
                seen[cur] = true;
                class_index[cur] = classes.len();
                class.push(self.ground.token(cur).clone());
                cur = self.map[cur] as usize;
                if cur == start {
                    break;
                }
            }
            classes.push(class);
        }
        OrbitPartition {
            ground: Arc::clone(&self.ground),
            classes,
            class_index,
        }
    }

    /// Orbit sizes in ascending order.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut sizes: Vec<usize> = self.orbits().classes().iter().map(Vec::len).collect();
        sizes.sort_unstable();
        sizes
    }

    /// `c . self . c^-1`.
    pub fn conjugate_by(&self, c: &Self) -> Self {
        c.compose(self).compose(&c.inverse())
    }

    /// Nontrivial cycles sorted by least member, each starting at its least
    /// member; fixed points are omitted.
    pub fn cycles(&self) -> Vec<Vec<HalfEdgeId>> {
        self.orbits()
            .classes()
            .iter()
            .filter(|class| class.len() > 1)
            .cloned()
            .collect()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for cycle in cycles {
            f.write_str("(")?;
            for (k, h) in cycle.iter().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{h}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Orbits of a permutation, with a membership index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitPartition {
    ground: Arc<GroundSet>,
    classes: Vec<Vec<HalfEdgeId>>,
    class_index: Vec<usize>,
}

impl OrbitPartition {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn classes(&self) -> &[Vec<HalfEdgeId>] {
        &self.classes
    }

    pub fn class_index_of(&self, h: &HalfEdgeId) -> Option<usize> {
        self.ground.index_of(h).map(|i| self.class_index[i])
    }

    pub fn class_of(&self, h: &HalfEdgeId) -> Option<&[HalfEdgeId]> {
        self.class_index_of(h).map(|c| self.classes[c].as_slice())
    }

    /// Least member of each class, in class order.
    pub fn reps(&self) -> Vec<HalfEdgeId> {
        self.classes.iter().map(|c| c[0].clone()).collect()
    }

    pub fn sizes(&self) -> Vec<usize> {
        let mut sizes: Vec<usize> = self.classes.iter().map(Vec::len).collect();
        sizes.sort_unstable();
        sizes
    }
}

fn parse_cycles(text: &str) -> Result<Vec<Vec<String>>, String> {
    let mut cycles = Vec::new();
    let mut rest = text.trim();
    while !rest.is_empty() {
        if !rest.starts_with('(') {
            return Err(format!("expected '(' at {rest:?}"));
        }
        let close = rest
            .find(')')
            .ok_or_else(|| format!("unclosed cycle at {rest:?}"))?;
        let inner = &rest[1..close];
        if inner.contains('(') {
            return Err(format!("nested '(' in cycle at {rest:?}"));
        }
        let members: Vec<String> = inner.split_whitespace().map(str::to_owned).collect();
        if members.is_empty() {
            return Err("empty cycle".to_owned());
        }
        cycles.push(members);
        rest = rest[close + 1..].trim_start();
    }
    Ok(cycles)
}

/// Tokenized cycle lists for callers that do their own token validation.
pub(crate) fn parse_cycle_tokens(text: &str) -> Result<Vec<Vec<String>>, String> {
    parse_cycles(text)
}
