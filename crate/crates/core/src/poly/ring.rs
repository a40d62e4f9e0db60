use super::Monomial;
use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

/// Dense index of a ring variable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VarId(pub usize);

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum TermOrder {
    GrevLex,
    Lex,
    /// Every monomial involving a front variable beats every monomial that
    /// does not; ties inside each block are broken by graded reverse lex.
    BlockElimination { front: Vec<VarId> },
}

/// Named variables plus the active term order. Variable 0 is the largest.
#[derive(Clone)]
pub struct Ring {
    names: Vec<String>,
    lookup: HashMap<String, VarId>,
    order: TermOrder,
    front: Vec<usize>,
    rest: Vec<usize>,
}

impl Ring {
    pub fn new(names: Vec<String>, order: TermOrder) -> Arc<Ring> {
        let lookup: HashMap<String, VarId> =
            names.iter().enumerate().map(|(i, n)| (n.clone(), VarId(i))).collect();
        assert_eq!(lookup.len(), names.len(), "duplicate variable names");
        let (front, rest) = match &order {
            TermOrder::BlockElimination { front } => {
                let mut f: Vec<usize> = front.iter().map(|v| v.0).collect();
                f.sort_unstable();
                f.dedup();
                let r = (0..names.len()).filter(|i| f.binary_search(i).is_err()).collect();
                (f, r)
            }
            _ => (Vec::new(), (0..names.len()).collect()),
        };
        Arc::new(Ring { names, lookup, order, front, rest })
    }

    pub fn grevlex<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Arc<Ring> {
        Ring::new(names.into_iter().map(Into::into).collect(), TermOrder::GrevLex)
    }

    pub fn with_order(&self, order: TermOrder) -> Arc<Ring> {
        Ring::new(self.names.clone(), order)
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, v: VarId) -> &str {
        &self.names[v.0]
    }

    pub fn var(&self, name: &str) -> Option<VarId> {
        self.lookup.get(name).copied()
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    /// Same variables in the same positions (orders may differ).
    pub fn same_vars(&self, other: &Ring) -> bool {
        std::ptr::eq(self, other) || self.names == other.names
    }

    /// Compares monomials under the ring's term order.
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self.order {
            TermOrder::GrevLex => grevlex(a, b),
            TermOrder::Lex => a.exponents().cmp(b.exponents()),
            TermOrder::BlockElimination { .. } => {
                grevlex_on(a, b, &self.front).then_with(|| grevlex_on(a, b, &self.rest))
            }
        }
    }
}

fn grevlex(a: &Monomial, b: &Monomial) -> Ordering {
    a.degree().cmp(&b.degree()).then_with(|| {
        for (x, y) in a.exponents().iter().zip(b.exponents()).rev() {
            if x != y {
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

fn grevlex_on(a: &Monomial, b: &Monomial, vars: &[usize]) -> Ordering {
    let (ea, eb) = (a.exponents(), b.exponents());
    let da: u64 = vars.iter().map(|&i| ea[i] as u64).sum();
    let db: u64 = vars.iter().map(|&i| eb[i] as u64).sum();
    da.cmp(&db).then_with(|| {
        for &i in vars.iter().rev() {
            if ea[i] != eb[i] {
                return eb[i].cmp(&ea[i]);
            }
        }
        Ordering::Equal
    })
}

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names && self.order == other.order
    }
}

impl Eq for Ring {}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ring({} vars, {:?})", self.names.len(), self.order)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e.to_vec())
    }

    #[test]
    fn grevlex_examples() {
        let r = Ring::grevlex(["x", "y", "z"]);
        // x*z < y^2 in grevlex, > in lex
        assert_eq!(r.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Less);
        assert_eq!(r.with_order(TermOrder::Lex).cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Greater);
        assert_eq!(r.cmp(&m(&[0, 0, 2]), &m(&[1, 0, 0])), Ordering::Greater);
    }

    #[test]
    fn block_order_ranks_front_first() {
        let r = Ring::new(
            vec!["x".into(), "t".into(), "y".into()],
            TermOrder::BlockElimination { front: vec![VarId(1)] },
        );
        assert_eq!(r.cmp(&m(&[0, 1, 0]), &m(&[5, 0, 5])), Ordering::Greater);
        assert_eq!(r.cmp(&m(&[2, 0, 0]), &m(&[0, 0, 1])), Ordering::Greater);
    }
}
