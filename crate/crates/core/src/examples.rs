//! Reference instances with published parameters, used by the `example`
//! command and the acceptance suite.

use serde::Serialize;

use crate::construct::Family;
use crate::error::{Error, Result};
use crate::sympair::PairClass;

#[derive(Clone, Debug, Serialize)]
pub struct Instance {
    pub id: &'static str,
    pub family: Family,
    pub q: u32,
    pub n: usize,
    /// Field modulus c_0..c_m, or `None` for a prime field.
    pub modulus: Option<&'static [u32]>,
    pub length: usize,
    pub k: usize,
    pub d_h: usize,
    pub d_sp: usize,
    pub class: PairClass,
    /// 1-based source coordinate shown at each position of the interleaved code.
    pub listing: &'static [usize],
}

pub const INSTANCES: [Instance; 5] = [
    Instance {
        id: "3.1",
        family: Family::R123,
        q: 4,
        n: 4,
        modulus: Some(&[1, 1, 1]),
        length: 12,
        k: 6,
        d_h: 4,
        d_sp: 8,
        class: PairClass::Mds,
        listing: &[1, 6, 9, 2, 7, 10, 3, 8, 11, 4, 5, 12],
    },
    Instance {
        id: "3.2",
        family: Family::R113,
        q: 7,
        n: 4,
        modulus: None,
        length: 12,
        k: 7,
        d_h: 4,
        d_sp: 7,
        class: PairClass::Mds,
        listing: &[1, 6, 9, 2, 7, 10, 3, 8, 11, 4, 5, 12],
    },
    Instance {
        id: "3.3",
        family: Family::R224,
        q: 7,
        n: 5,
        modulus: None,
        length: 15,
        k: 7,
        d_h: 5,
        d_sp: 10,
        class: PairClass::Mds,
        listing: &[1, 7, 11, 2, 8, 12, 3, 9, 13, 4, 10, 14, 5, 6, 15],
    },
    Instance {
        id: "3.4",
        family: Family::R0013,
        q: 5,
        n: 5,
        modulus: None,
        length: 20,
        k: 16,
        d_h: 3,
        d_sp: 6,
        class: PairClass::Mds,
        listing: &[3, 6, 12, 16, 4, 7, 13, 17, 5, 8, 14, 18, 1, 9, 15, 19, 2, 10, 11, 20],
    },
    Instance {
        id: "3.5",
        family: Family::R0114,
        q: 9,
        n: 6,
        modulus: Some(&[1, 0, 1]),
        length: 24,
        k: 18,
        d_h: 4,
        d_sp: 7,
        class: PairClass::Amds,
        listing: &[1, 18, 8, 19, 2, 13, 9, 20, 3, 14, 10, 21, 4, 15, 11, 22, 5, 16, 12, 23, 6, 17, 7, 24],
    },
];

pub fn instance(id: &str) -> Result<&'static Instance> {
    INSTANCES
        .iter()
        .find(|i| i.id == id.trim())
        .ok_or_else(|| Error::InadmissibleParameters(format!("unknown example {id:?} (expected 3.1 to 3.5)")))
}
