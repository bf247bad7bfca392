//! Spinor norms of the outer automorphisms `±a` of the simply-laced double
//! extensions, acting on `W = H₂(Λ)`.

use alloc::string::String;
use alloc::vec::Vec;

use crate::cartan::{diagram_automorphisms, DiagramAutomorphism, ExtensionSpec, FiniteType};
use crate::error::{Error, Result};
use crate::exactform::{Isometry, SquarefreeClass};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OuterEntry {
    pub automorphism: DiagramAutomorphism,
    /// Cycle notation in the node labels of `C⁺⁺`.
    pub cycles: String,
    pub spinor_a: SquarefreeClass,
    pub spinor_minus_a: SquarefreeClass,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SpinorTable {
    pub name: String,
    /// Non-identity diagram automorphisms, in search order.
    pub entries: Vec<OuterEntry>,
    pub spinor_minus_id: SquarefreeClass,
}

pub fn spinor_table(base: FiniteType) -> Result<SpinorTable> {
    if !base.is_simply_laced() {
        return Err(Error::NotSimplyLaced);
    }
    spinor_table_for(&base.double_extend())
}

pub fn spinor_table_for(ext: &ExtensionSpec) -> Result<SpinorTable> {
    let w = &ext.space;
    let mut entries = Vec::new();
    for a in diagram_automorphisms(&ext.cartan) {
        if a.is_identity() {
            continue;
        }
        let m = ext.automorphism_isometry(&a)?;
        entries.push(OuterEntry {
            cycles: a.cycle_notation(ext.cartan.labels()),
            spinor_a: w.spinor_norm(&m)?,
            spinor_minus_a: w.spinor_norm(&m.negate())?,
            automorphism: a,
        });
    }
    Ok(SpinorTable {
        name: ext.name(),
        entries,
        spinor_minus_id: w.spinor_norm(&Isometry::minus_identity(w.dim()))?,
    })
}
