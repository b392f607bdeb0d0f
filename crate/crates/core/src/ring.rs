use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::monomial::MonomialOrder;

/// The ambient ring `k[x_1..x_p]` together with the order used to compute in it.
///
/// With [`MonomialOrder::LocalDegRevLex`] this models the localization at the
/// origin; the block order adjoins global auxiliary variables in front.
#[derive(Debug, PartialEq, Eq, Hash)]
pub struct RingCtx {
    vars: Vec<String>,
    field: Field,
    order: MonomialOrder,
    spair_budget: Option<u64>,
}

pub type Ring = Arc<RingCtx>;

impl RingCtx {
    pub fn new(vars: &[&str], field: Field, order: MonomialOrder) -> Result<Ring> {
        Self::from_names(vars.iter().map(|s| s.to_string()).collect(), field, order)
    }

    pub fn from_names(vars: Vec<String>, field: Field, order: MonomialOrder) -> Result<Ring> {
        if vars.is_empty() {
            return Err(Error::InvalidRing("at least one variable is required".into()));
        }
        let mut seen = HashSet::new();
        for v in &vars {
            if !is_identifier(v) {
                return Err(Error::InvalidRing(format!("invalid variable name {v:?}")));
            }
            if !seen.insert(v.as_str()) {
                return Err(Error::InvalidRing(format!("duplicate variable {v:?}")));
            }
        }
        if order.aux_count() >= vars.len() {
            return Err(Error::InvalidRing(
                "block order needs at least one main variable".into(),
            ));
        }
        Ok(Arc::new(RingCtx {
            vars,
            field,
            order,
            spair_budget: None,
        }))
    }

    /// The local ring `k[x_1..x_p]_(x)` with the local degrevlex order.
    pub fn local(vars: &[&str], field: Field) -> Result<Ring> {
        Self::new(vars, field, MonomialOrder::LocalDegRevLex)
    }

    /// Local ring on variables `x1..xp`.
    pub fn local_numbered(p: usize, field: Field) -> Result<Ring> {
        let names: Vec<String> = (1..=p).map(|i| format!("x{i}")).collect();
        Self::from_names(names, field, MonomialOrder::LocalDegRevLex)
    }

    /// Copy of this ring that aborts any single standard-basis computation
    /// after `budget` S-pair reductions.
    pub fn with_spair_budget(&self, budget: Option<u64>) -> Ring {
        Arc::new(RingCtx {
            vars: self.vars.clone(),
            field: self.field,
            order: self.order,
            spair_budget: budget,
        })
    }

    /// Ring with `names` prepended as global auxiliary variables, main variables local.
    pub fn with_aux_vars(&self, names: &[&str]) -> Result<Ring> {
        let mut vars: Vec<String> = names.iter().map(|s| s.to_string()).collect();
        vars.extend(self.vars.iter().cloned());
        let ring = Self::from_names(
            vars,
            self.field,
            MonomialOrder::Block { aux: names.len() },
        )?;
        Ok(ring.with_spair_budget(self.spair_budget))
    }

    /// The polynomial ring itself under global degrevlex, for operations that
    /// commute with localization; `None` unless this is the plain local ring.
    pub fn global_twin(&self) -> Option<Ring> {
        if self.order != MonomialOrder::LocalDegRevLex {
            return None;
        }
        Some(Arc::new(RingCtx {
            vars: self.vars.clone(),
            field: self.field,
            order: MonomialOrder::GlobalDegRevLex,
            spair_budget: self.spair_budget,
        }))
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    /// Number of main (non-auxiliary) variables.
    pub fn dim(&self) -> usize {
        self.vars.len() - self.order.aux_count()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn spair_budget(&self) -> Option<u64> {
        self.spair_budget
    }

    pub fn same_ring(&self, other: &RingCtx) -> bool {
        self.vars == other.vars && self.field == other.field && self.order == other.order
    }
}

impl fmt::Display for RingCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}] ({})", self.field, self.vars.join(","), self.order)
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_variables() {
        assert!(RingCtx::local(&[], Field::Rational).is_err());
        assert!(RingCtx::local(&["x", "x"], Field::Rational).is_err());
        assert!(RingCtx::local(&["2x"], Field::Rational).is_err());
        assert!(RingCtx::local(&["x1", "y_2"], Field::Rational).is_ok());
    }

    #[test]
    fn aux_ring_is_block_ordered() {
        let r = RingCtx::local(&["x", "y"], Field::Rational).unwrap();
        let t = r.with_aux_vars(&["t"]).unwrap();
        assert_eq!(t.order(), MonomialOrder::Block { aux: 1 });
        assert_eq!(t.dim(), 2);
        assert_eq!(t.vars()[0], "t");
    }
}
