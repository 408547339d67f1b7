//! Exporters emitting an ideal as a computer-algebra-system script.
//!
//! Variable labels used here (like `x(1,2)`) are not valid identifiers in
//! the target systems, so each script renames them to v1..vn and records the
//! correspondence in comments.

use crate::monomial::MonomialIdeal;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Dialect {
    Macaulay2,
    Singular,
}

impl std::str::FromStr for Dialect {
    type Err = Error;
    fn from_str(s: &str) -> Result<Dialect> {
        match s {
            "m2" | "macaulay2" => Ok(Dialect::Macaulay2),
            "singular" => Ok(Dialect::Singular),
            other => Err(Error::Parse(format!("unknown dialect {other:?}"))),
        }
    }
}

pub fn export(ideal: &MonomialIdeal, dialect: Dialect) -> String {
    let rename: Vec<String> = (1..=ideal.nvars()).map(|i| format!("v{i}")).collect();
    let term = |g: &crate::monomial::Monomial| -> String {
        if g.is_unit() {
            return "1".to_string();
        }
        g.exps()
            .iter()
            .map(|&(v, e)| {
                if e == 1 {
                    rename[v].clone()
                } else {
                    format!("{}^{}", rename[v], e)
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    };
    let gens: Vec<String> = ideal.gens().iter().map(term).collect();
    match dialect {
        Dialect::Macaulay2 => {
            let mut out = String::new();
            out.push_str("-- monomial ideal export\n");
            for (v, lab) in ideal.vars().iter().enumerate() {
                out.push_str(&format!("-- {} = {}\n", rename[v], lab));
            }
            out.push_str(&format!("R = QQ[{}];\n", rename.join(", ")));
            if gens.is_empty() {
                out.push_str("I = ideal(0_R);\n");
            } else {
                out.push_str(&format!("I = ideal({});\n", gens.join(", ")));
            }
            out.push_str("betti res I\n");
            out
        }
        Dialect::Singular => {
            let mut out = String::new();
            out.push_str("// monomial ideal export\n");
            for (v, lab) in ideal.vars().iter().enumerate() {
                out.push_str(&format!("// {} = {}\n", rename[v], lab));
            }
            out.push_str(&format!("ring R = 0, ({}), dp;\n", rename.join(", ")));
            if gens.is_empty() {
                out.push_str("ideal I = 0;\n");
            } else {
                out.push_str(&format!("ideal I = {};\n", gens.join(", ")));
            }
            out.push_str("resolution r = mres(I, 0);\nprint(betti(r), \"betti\");\n");
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scripts_reference_all_generators() {
        let i = MonomialIdeal::from_text("vars: x(1,1) x(1,2)\nx(1,1)*x(1,2)\n").unwrap();
        let m2 = export(&i, Dialect::Macaulay2);
        assert!(m2.contains("QQ[v1, v2]"));
        assert!(m2.contains("ideal(v1*v2)"));
        assert!(m2.contains("-- v1 = x(1,1)"));
        let sg = export(&i, Dialect::Singular);
        assert!(sg.contains("ring R = 0, (v1, v2), dp;"));
        assert!(sg.contains("ideal I = v1*v2;"));
        assert!("m2".parse::<Dialect>().is_ok());
        assert!("maple".parse::<Dialect>().is_err());
    }
}
