//! Move orders: the 8! permutations of the knight deltas.
//!
//! Ranks are lexicographic over *positions* in [`base_order`], so rank 0 is
//! the base order itself and rank 40319 is its reversal. The text form is a
//! sequence of `<dx,dy>` tokens, e.g. `<1,2> <2,1> <1,-2> ...`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::board::{MoveDelta, KNIGHT_DELTAS};
use crate::error::{Error, Result};

/// Number of distinct move orders, 8!.
pub const ORDER_COUNT: u32 = 40_320;

const FACTORIALS: [u32; 8] = [1, 1, 2, 6, 24, 120, 720, 5040];

/// A permutation of the eight knight deltas.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MoveOrder([MoveDelta; 8]);

/// Lexicographic index of a [`MoveOrder`], in `[0, 40320)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub struct OrderRank(u32);

impl OrderRank {
    pub fn new(rank: u64) -> Result<Self> {
        if rank < ORDER_COUNT as u64 {
            Ok(OrderRank(rank as u32))
        } else {
            Err(Error::RankOutOfRange(rank))
        }
    }

    pub fn get(self) -> u32 {
        self.0
    }

    pub fn all() -> impl DoubleEndedIterator<Item = OrderRank> + ExactSizeIterator {
        (0..ORDER_COUNT).map(OrderRank)
    }
}

impl TryFrom<u32> for OrderRank {
    type Error = Error;

    fn try_from(r: u32) -> Result<Self> {
        OrderRank::new(r as u64)
    }
}

impl From<OrderRank> for u32 {
    fn from(r: OrderRank) -> u32 {
        r.0
    }
}

impl fmt::Display for OrderRank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl MoveOrder {
    /// Builds an order, rejecting repeated deltas.
    pub fn new(deltas: [MoveDelta; 8]) -> Result<Self> {
        let mut seen = [false; 8];
        for d in deltas {
            let i = d.base_index();
            if seen[i] {
                return Err(Error::ParseOrder {
                    token: d.to_string(),
                    reason: "duplicate delta",
                });
            }
            seen[i] = true;
        }
        Ok(MoveOrder(deltas))
    }

    pub fn deltas(&self) -> &[MoveDelta; 8] {
        &self.0
    }

    /// Positions of each delta in [`base_order`].
    pub fn base_indices(&self) -> [usize; 8] {
        self.0.map(MoveDelta::base_index)
    }

    pub fn reversed(&self) -> MoveOrder {
        let mut d = self.0;
        d.reverse();
        MoveOrder(d)
    }
}

impl std::ops::Index<usize> for MoveOrder {
    type Output = MoveDelta;

    fn index(&self, i: usize) -> &MoveDelta {
        &self.0[i]
    }
}

pub fn base_order() -> MoveOrder {
    MoveOrder(KNIGHT_DELTAS)
}

pub fn reverse(order: &MoveOrder) -> MoveOrder {
    order.reversed()
}

/// The `rank`-th permutation of [`base_order`] in lexicographic order.
pub fn unrank(rank: OrderRank) -> MoveOrder {
    let mut pool: Vec<usize> = (0..8).collect();
    let mut rest = rank.0;
    let mut out = [KNIGHT_DELTAS[0]; 8];
    for (pos, slot) in out.iter_mut().enumerate() {
        let f = FACTORIALS[7 - pos];
        let pick = (rest / f) as usize;
        rest %= f;
        *slot = KNIGHT_DELTAS[pool.remove(pick)];
    }
    MoveOrder(out)
}

/// Inverse of [`unrank`].
pub fn rank(order: &MoveOrder) -> OrderRank {
    let idx = order.base_indices();
    let mut r = 0;
    for i in 0..8 {
        let smaller_later = idx[i + 1..].iter().filter(|&&j| j < idx[i]).count() as u32;
        r += smaller_later * FACTORIALS[7 - i];
    }
    OrderRank(r)
}

/// Formats as `<dx,dy>` tokens separated by single spaces.
pub fn format_order(order: &MoveOrder) -> String {
    order.to_string()
}

/// Parses `<dx,dy>` tokens. Tokens may be separated by whitespace or written
/// back to back; whitespace inside a token is rejected.
pub fn parse_order(text: &str) -> Result<MoveOrder> {
    let tokens = tokenize(text)?;
    let mut deltas = Vec::with_capacity(8);
    let mut seen = [false; 8];
    for tok in &tokens {
        let d = parse_token(tok)?;
        let i = d.base_index();
        if seen[i] {
            return Err(Error::ParseOrder {
                token: tok.to_string(),
                reason: "duplicate delta",
            });
        }
        seen[i] = true;
        deltas.push(d);
    }
    let deltas: [MoveDelta; 8] = deltas.try_into().map_err(|_| Error::ParseOrder {
        token: text.trim().to_string(),
        reason: "expected exactly 8 deltas",
    })?;
    Ok(MoveOrder(deltas))
}

fn tokenize(text: &str) -> Result<Vec<&str>> {
    let mut tokens = Vec::new();
    let mut rest = text.trim_start();
    while !rest.is_empty() {
        let bad = |t: &str| Error::ParseOrder {
            token: t.to_string(),
            reason: "expected a token of the form <dx,dy>",
        };
        if !rest.starts_with('<') {
            let end = rest.find(char::is_whitespace).unwrap_or(rest.len());
            return Err(bad(&rest[..end]));
        }
        let Some(close) = rest.find('>') else {
            return Err(bad(rest.split_whitespace().next().unwrap_or(rest)));
        };
        let tok = &rest[..=close];
        if tok[1..].contains(['<', ' ', '\t', '\n', '\r']) {
            let end = rest
                .find(char::is_whitespace)
                .unwrap_or(rest.len())
                .min(close + 1);
            return Err(bad(&rest[..end]));
        }
        tokens.push(tok);
        rest = rest[close + 1..].trim_start();
    }
    Ok(tokens)
}

fn parse_token(tok: &str) -> Result<MoveDelta> {
    let bad = |reason| Error::ParseOrder {
        token: tok.to_string(),
        reason,
    };
    let inner = &tok[1..tok.len() - 1];
    let (a, b) = inner
        .split_once(',')
        .ok_or_else(|| bad("expected a token of the form <dx,dy>"))?;
    let int = |s: &str| -> Option<i32> {
        let digits = s.strip_prefix('-').unwrap_or(s);
        if digits.is_empty() || !digits.bytes().all(|c| c.is_ascii_digit()) {
            return None;
        }
        s.parse().ok()
    };
    let (dx, dy) = match (int(a), int(b)) {
        (Some(dx), Some(dy)) => (dx, dy),
        _ => return Err(bad("expected a token of the form <dx,dy>")),
    };
    MoveDelta::new(dx, dy).map_err(|_| bad("not a knight move"))
}

impl fmt::Display for MoveOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

impl FromStr for MoveOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_order(s)
    }
}

impl Serialize for MoveOrder {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for MoveOrder {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        parse_order(&text).map_err(serde::de::Error::custom)
    }
}
