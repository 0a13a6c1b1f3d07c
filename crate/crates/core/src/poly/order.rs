use std::cmp::Ordering;

use super::Monomial;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum OrderKind {
    /// Pure lexicographic order.
    Lex,
    /// Graded reverse lexicographic order.
    Grevlex,
    /// Two blocks compared lexicographically, block by block; inside each
    /// block monomials are compared by grevlex. The first `split` entries of
    /// the priority list form the (greater) block to be eliminated.
    Block { split: usize },
}

/// A monomial order given by a kind and a variable priority list (most
/// significant variable first).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    kind: OrderKind,
    priority: Vec<usize>,
}

impl MonomialOrder {
    /// Lex with `x_1 > x_2 > … > x_n`.
    pub fn lex(nvars: usize) -> Self {
        Self::lex_with(identity(nvars))
    }

    pub fn lex_with(priority: Vec<usize>) -> Self {
        MonomialOrder {
            kind: OrderKind::Lex,
            priority,
        }
    }

    /// Grevlex with `x_1 > x_2 > … > x_n`.
    pub fn grevlex(nvars: usize) -> Self {
        Self::grevlex_with(identity(nvars))
    }

    pub fn grevlex_with(priority: Vec<usize>) -> Self {
        MonomialOrder {
            kind: OrderKind::Grevlex,
            priority,
        }
    }

    /// Elimination order: every variable in `eliminate` is greater than
    /// every other variable. Both blocks keep their index order.
    pub fn elimination(nvars: usize, eliminate: &[usize]) -> Self {
        let mut priority: Vec<usize> = (0..nvars).filter(|i| eliminate.contains(i)).collect();
        let split = priority.len();
        priority.extend((0..nvars).filter(|i| !eliminate.contains(i)));
        MonomialOrder {
            kind: OrderKind::Block { split },
            priority,
        }
    }

    pub fn kind(&self) -> &OrderKind {
        &self.kind
    }

    pub fn priority(&self) -> &[usize] {
        &self.priority
    }

    pub fn nvars(&self) -> usize {
        self.priority.len()
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self.kind {
            OrderKind::Lex => lex(&self.priority, a, b),
            OrderKind::Grevlex => grevlex(&self.priority, a, b),
            OrderKind::Block { split } => {
                let (high, low) = self.priority.split_at(split);
                grevlex(high, a, b).then_with(|| grevlex(low, a, b))
            }
        }
    }
}

fn identity(n: usize) -> Vec<usize> {
    (0..n).collect()
}

fn lex(vars: &[usize], a: &Monomial, b: &Monomial) -> Ordering {
    for &v in vars {
        match a.exp(v).cmp(&b.exp(v)) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    Ordering::Equal
}

fn grevlex(vars: &[usize], a: &Monomial, b: &Monomial) -> Ordering {
    let da: u32 = vars.iter().map(|&v| a.exp(v) as u32).sum();
    let db: u32 = vars.iter().map(|&v| b.exp(v) as u32).sum();
    if da != db {
        return da.cmp(&db);
    }
    for &v in vars.iter().rev() {
        match a.exp(v).cmp(&b.exp(v)) {
            Ordering::Equal => continue,
            other => return other.reverse(),
        }
    }
    Ordering::Equal
}
