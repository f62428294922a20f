//! Ring descriptions.
//!
//! A ring is a flat list of named variables over an exact field. Towers
//! like `K[C][x, xn]` are modeled by designating the first `num_main`
//! variables as the geometric block (x and xn) and the remaining ones as
//! coefficient parameters (C, t, chi, ...); block term orders keep the two
//! groups separated. Variable names are unique across the whole tower.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::order::TermOrder;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Ring {
    pub field: FieldSpec,
    pub vars: Vec<String>,
    /// Variables `vars[..num_main]` form the geometric block; the rest are
    /// coefficient parameters. For a plain polynomial ring this is
    /// `vars.len()`.
    pub num_main: usize,
}

impl Ring {
    pub fn new(field: FieldSpec, vars: Vec<String>) -> Result<Self> {
        let n = vars.len();
        Ring::with_params(field, vars, n)
    }

    pub fn with_params(field: FieldSpec, vars: Vec<String>, num_main: usize) -> Result<Self> {
        if num_main > vars.len() {
            return Err(Error::Argument("num_main exceeds variable count".into()));
        }
        for (i, v) in vars.iter().enumerate() {
            if v.is_empty() || !v.chars().next().unwrap().is_ascii_alphabetic() {
                return Err(Error::Argument(format!("invalid variable name `{v}`")));
            }
            if !v.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
                return Err(Error::Argument(format!("invalid variable name `{v}`")));
            }
            if vars[..i].contains(v) {
                return Err(Error::Argument(format!("duplicate variable name `{v}`")));
            }
        }
        Ok(Ring { field, vars, num_main })
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn num_params(&self) -> usize {
        self.vars.len() - self.num_main
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Index of the distinguished last main variable (xn) when the main
    /// block is nonempty.
    pub fn xn_index(&self) -> usize {
        assert!(self.num_main > 0);
        self.num_main - 1
    }

    /// Extends this ring by fresh parameter variables appended at the end.
    pub fn extend_params(&self, names: &[String]) -> Result<Ring> {
        let mut vars = self.vars.clone();
        vars.extend_from_slice(names);
        Ring::with_params(self.field, vars, self.num_main)
    }

    /// A ring over the same field consisting only of this ring's parameter
    /// variables (all of them main in the new ring).
    pub fn param_ring(&self) -> Result<Ring> {
        Ring::new(self.field, self.vars[self.num_main..].to_vec())
    }

    /// Appends a fresh variable at the end of the main block (the new
    /// distinguished xn). Returns the ring and the index map for old
    /// variables.
    pub fn append_main_var(&self, name: &str) -> Result<(Ring, Vec<usize>)> {
        let mut vars = self.vars[..self.num_main].to_vec();
        vars.push(name.to_string());
        vars.extend_from_slice(&self.vars[self.num_main..]);
        let ring = Ring::with_params(self.field, vars, self.num_main + 1)?;
        let map: Vec<usize> = (0..self.nvars())
            .map(|i| if i < self.num_main { i } else { i + 1 })
            .collect();
        Ok((ring, map))
    }

    /// First name of the form `x<k>` (k >= num_main) not already in use.
    pub fn fresh_main_name(&self) -> String {
        (self.num_main..)
            .map(|k| format!("x{k}"))
            .find(|name| self.var_index(name).is_none())
            .unwrap()
    }

    /// The elimination block order on a tower: geometric variables outer
    /// under `x_order`, parameters inner under `param_order`.
    pub fn tower_order(&self, x_order: TermOrder, param_order: TermOrder) -> TermOrder {
        if self.num_params() == 0 {
            x_order
        } else {
            TermOrder::block(self.num_main, x_order, param_order)
        }
    }
}
