//! Tables recomputed from the library on every call.

use super::render::{Cell, Report};
use crate::error::{Error, Result};
use crate::factor::{free_group_index, jones_index, matrix_coupling};
use crate::finite_field::PrimePower;
use crate::fuchsian::{self, catalog, covolume, covolume_ratio, GroupMode, CONGRUENCE_GROUPS};
use crate::padic::{
    depth_zero_formal_dim, ihara_lattice, jl_formal_dim, lattice_covolume, steinberg_formal_dim,
    vn_dimension_padic, HaarNormalization, JLClass, RepKind,
};

pub const TABLE_NAMES: &str =
    "hecke:<qmax>, free-congruence, vn-free:<m>, subfactor:<m>, matrix, padic:<q>:<nmax>, jl:<p>:<jmax>";

fn unknown(name: &str) -> Error {
    Error::UnknownTable(name.to_string(), TABLE_NAMES)
}

fn number<T: std::str::FromStr>(name: &str, field: &str) -> Result<T> {
    field.parse().map_err(|_| unknown(name))
}

pub fn table(name: &str) -> Result<Report> {
    let parts: Vec<&str> = name.split(':').collect();
    match parts[..] {
        ["hecke", qmax] => hecke(number(name, qmax)?),
        ["free-congruence"] => free_congruence(),
        ["vn-free", m] => vn_free(number(name, m)?),
        ["subfactor", m] => subfactor(number(name, m)?),
        ["matrix"] => matrix(),
        ["padic", q, nmax] => padic(&PrimePower::new(number(name, q)?)?, number(name, nmax)?),
        ["jl", p, jmax] => jl(&PrimePower::new(number(name, p)?)?, number(name, jmax)?),
        _ => Err(unknown(name)),
    }
}

fn hecke(qmax: u32) -> Result<Report> {
    let rows = (3..=qmax)
        .map(|q| {
            let name = format!("H{q}");
            let sig = catalog(&name)?;
            Ok(vec![
                Cell::text(name),
                Cell::text(sig.to_string()),
                Cell::text(format!("Z2*Z{q}")),
                Cell::Pi(covolume(&sig)),
            ])
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Report::table(
        &["group", "signature", "isomorphic_to", "covolume"],
        rows,
    ))
}

fn free_chain() -> Vec<(&'static str, fuchsian::FuchsianSignature, u32)> {
    CONGRUENCE_GROUPS
        .iter()
        .map(|&name| {
            let sig = catalog(name).expect("catalog names resolve");
            let rank = sig.free_rank().expect("congruence chain groups are free");
            (name, sig, rank)
        })
        .collect()
}

fn free_congruence() -> Result<Report> {
    let chain = free_chain();
    let top = &chain[0];
    let rows = chain
        .iter()
        .map(|(name, sig, rank)| {
            Ok(vec![
                Cell::text(*name),
                Cell::text(sig.to_string()),
                Cell::text(format!("F{rank}")),
                Cell::Pi(covolume(sig)),
                Cell::rat(covolume_ratio(&top.1, sig)),
                Cell::int(free_group_index(u64::from(top.2), u64::from(*rank))?),
            ])
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Report::table(
        &[
            "group",
            "signature",
            "isomorphic_to",
            "covolume",
            "covolume_ratio",
            "nielsen_schreier",
        ],
        rows,
    ))
}

fn vn_free(m: i64) -> Result<Report> {
    let rows = free_chain()
        .iter()
        .map(|(name, sig, rank)| {
            Ok(vec![
                Cell::text(*name),
                Cell::text(format!("F{rank}")),
                Cell::rat(fuchsian::vn_dimension(sig, m, GroupMode::Psl2R)?),
            ])
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Report::table(&["group", "isomorphic_to", "vn_dim"], rows))
}

fn subfactor(m: i64) -> Result<Report> {
    let chain = free_chain();
    let rows = [(0, 1), (1, 2), (0, 2)]
        .iter()
        .map(|&(a, s)| {
            let (_, ambient, ambient_rank) = &chain[a];
            let (_, sub, sub_rank) = &chain[s];
            let dim_ambient = fuchsian::vn_dimension(ambient, m, GroupMode::Psl2R)?;
            let dim_sub = fuchsian::vn_dimension(sub, m, GroupMode::Psl2R)?;
            Ok(vec![
                Cell::text(format!("RF{ambient_rank}")),
                Cell::text(format!("RF{sub_rank}")),
                Cell::rat(jones_index(&dim_sub, &dim_ambient)?),
                Cell::int(free_group_index(
                    u64::from(*ambient_rank),
                    u64::from(*sub_rank),
                )?),
            ])
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Report::table(
        &["ambient", "subfactor", "jones_index", "nielsen_schreier"],
        rows,
    ))
}

fn matrix() -> Result<Report> {
    let sub = matrix_coupling(2, 3)?;
    let ambient = matrix_coupling(6, 1)?;
    let rows = vec![
        vec![Cell::text("dim M2(C)⊗1 on C2⊗C3"), Cell::rat(sub.clone())],
        vec![
            Cell::text("dim M2(C)⊗M3(C) on C2⊗C3"),
            Cell::rat(ambient.clone()),
        ],
        vec![
            Cell::text("dim M3(C) on C3"),
            Cell::rat(matrix_coupling(3, 1)?),
        ],
        vec![
            Cell::text("[M2(C)⊗M3(C) : M2(C)⊗1]"),
            Cell::rat(jones_index(&sub, &ambient)?),
        ],
    ];
    Ok(Report::table(&["quantity", "value"], rows))
}

fn padic(q: &PrimePower, nmax: u64) -> Result<Report> {
    let mut rows = Vec::new();
    for n in 2..=nmax {
        let Ok(lattice) = ihara_lattice(q, n) else {
            continue;
        };
        for norm in HaarNormalization::ALL {
            rows.push(vec![
                Cell::int(n),
                Cell::int(lattice.double_cosets()),
                Cell::text(norm.name()),
                Cell::rat(lattice_covolume(q, n, norm)?),
                Cell::rat(steinberg_formal_dim(q, norm)),
                Cell::rat(depth_zero_formal_dim(q, norm)),
                Cell::rat(vn_dimension_padic(q, n, RepKind::Steinberg, norm)?),
                Cell::rat(vn_dimension_padic(q, n, RepKind::DepthZeroCuspidal, norm)?),
            ]);
        }
    }
    Ok(Report::table(
        &[
            "n",
            "h",
            "norm",
            "covolume",
            "d_steinberg",
            "d_cuspidal",
            "vn_steinberg",
            "vn_cuspidal",
        ],
        rows,
    ))
}

fn jl(p: &PrimePower, jmax: u64) -> Result<Report> {
    let classes = std::iter::once(JLClass::GeneralizedSpecial)
        .chain((1..=jmax).map(JLClass::UnramifiedCuspidal))
        .chain((2..=jmax).step_by(2).map(JLClass::RamifiedCuspidal));
    let rows = classes
        .map(|cls| {
            Ok(vec![
                Cell::text(cls.kind()),
                cls.conductor().map_or_else(|| Cell::text("-"), Cell::int),
                Cell::Int(jl_formal_dim(p, cls)?.into()),
            ])
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Report::table(&["class", "j", "formal_dim"], rows))
}
