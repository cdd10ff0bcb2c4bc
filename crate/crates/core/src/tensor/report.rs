use serde::{Deserialize, Serialize};

use super::{
    multipliers, realize_tensor, realize_wedge, wedge, CenterTower, MultiplierData, QTensorSquare,
};
use super::{QuotientStructure, TensorOptions, WedgeSquare};
use crate::error::Result;
use crate::group::FiniteGroup;

/// Everything computed for one `(G, q)`.
#[derive(Clone, Debug)]
pub struct Analysis {
    pub base: FiniteGroup,
    pub q: u32,
    pub tensor: QTensorSquare,
    pub wedge: WedgeSquare,
    /// The classical exterior square (the same as `wedge` at `q = 0`).
    pub wedge0: WedgeSquare,
    pub multipliers: MultiplierData,
    pub tower: CenterTower,
}

impl Analysis {
    pub fn capable(&self) -> bool {
        self.tower.z_wedge.is_trivial()
    }

    pub fn report(&self) -> InvariantReport {
        InvariantReport {
            group: self.base.label().to_string(),
            order: self.base.order(),
            q: self.q,
            tensor_order: self.tensor.realized().order(),
            nabla_order: self.tensor.nabla().order(),
            delta_order: self.tensor.delta().order(),
            wedge_order: self.wedge.realized().order(),
            m_q: self.multipliers.m.order(),
            m0_q: self.multipliers.m0.order(),
            m0_hat_q: self.multipliers.m0_hat.order(),
            b0_q: self.multipliers.b0.clone(),
            b0_hat_q: self.multipliers.b0_hat.clone(),
            z_wedge: self.tower.z_wedge.order(),
            z_wedge_q: self.tower.z_wedge_q.order(),
            e_wedge_q: self.tower.e_wedge_q.order(),
            z_q: self.tower.z_q.order(),
            z_hat_q: self.tower.z_hat_q.order(),
            capable: self.capable(),
        }
    }
}

/// Realizes the tensor and exterior squares of `G` at `q` and derives the
/// multipliers and the center tower.
pub fn analyze(g: &FiniteGroup, q: u32, opts: &TensorOptions) -> Result<Analysis> {
    let tensor = realize_tensor(g, q, opts)?;
    let w = wedge(&tensor, opts)?;
    let wedge0 = if q == 0 {
        w.clone()
    } else {
        realize_wedge(g, 0, opts)?
    };
    let mult = multipliers(g, &w)?;
    let tower = CenterTower::from_parts(g, &wedge0, &w, &mult)?;
    Ok(Analysis {
        base: g.clone(),
        q,
        tensor,
        wedge: w,
        wedge0,
        multipliers: mult,
        tower,
    })
}

/// The invariants of one `(G, q)` pair. Orders of subgroups are reported as
/// integers; Bogomolov quotients as invariant factors when abelian.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub group: String,
    pub order: usize,
    pub q: u32,
    pub tensor_order: usize,
    pub nabla_order: usize,
    pub delta_order: usize,
    pub wedge_order: usize,
    pub m_q: usize,
    pub m0_q: usize,
    pub m0_hat_q: usize,
    pub b0_q: QuotientStructure,
    pub b0_hat_q: QuotientStructure,
    pub z_wedge: usize,
    pub z_wedge_q: usize,
    pub e_wedge_q: usize,
    pub z_q: usize,
    pub z_hat_q: usize,
    pub capable: bool,
}

impl std::fmt::Display for InvariantReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(
            f,
            "group {} (order {}), q = {}",
            self.group, self.order, self.q
        )?;
        writeln!(f, "  |tensor square|   {}", self.tensor_order)?;
        writeln!(
            f,
            "  |nabla|, |delta|  {}, {}",
            self.nabla_order, self.delta_order
        )?;
        writeln!(f, "  |exterior square| {}", self.wedge_order)?;
        writeln!(
            f,
            "  |M|, |M0|, |M0^|  {}, {}, {}",
            self.m_q, self.m0_q, self.m0_hat_q
        )?;
        writeln!(f, "  B0                {}", self.b0_q)?;
        writeln!(f, "  B0^               {}", self.b0_hat_q)?;
        writeln!(
            f,
            "  |Z^|, |Z^_q|, |E^_q|, |Z_q|, |Z^_q hat|  {}, {}, {}, {}, {}",
            self.z_wedge, self.z_wedge_q, self.e_wedge_q, self.z_q, self.z_hat_q
        )?;
        write!(f, "  capable           {}", self.capable)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::builtin;

    #[test]
    fn c2_report() {
        let r = analyze(&builtin("C2").unwrap(), 0, &TensorOptions::default())
            .unwrap()
            .report();
        assert_eq!(r.tensor_order, 2);
        assert_eq!(r.wedge_order, 1);
        assert!(!r.capable);
        let json = serde_json::to_string(&r).unwrap();
        assert!(json.contains("\"tensor_order\":2"));
        assert!(json.contains("\"b0_q\":[]"));
    }

    #[test]
    fn report_fields_are_stable() {
        let r = analyze(&builtin("S3").unwrap(), 2, &TensorOptions::default())
            .unwrap()
            .report();
        let v: serde_json::Value = serde_json::to_value(&r).unwrap();
        for key in [
            "tensor_order",
            "wedge_order",
            "m_q",
            "m0_q",
            "m0_hat_q",
            "b0_q",
            "b0_hat_q",
            "z_wedge",
            "z_wedge_q",
            "e_wedge_q",
            "z_q",
            "z_hat_q",
            "capable",
        ] {
            assert!(v.get(key).is_some(), "{key}");
        }
    }
}
