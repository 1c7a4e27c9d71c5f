use rayon::prelude::*;
use transmission::diagnostics::{
    grad_sup, growth_order_fit, localization_ratio_part, normalize, sector_energy, Measure, SectorRegion,
};
use transmission::elastic2d::{
    bracket_bi, bracket_mono, find_eigenvalue, solve_coefficients, Bracket, BracketKind, DiskEigenMode, LameParameters,
    Part, Side,
};
use transmission::elastic3d::{
    bracket_bi_3d, bracket_mono_3d, det_a_root, find_eigenvalue_3d, localization_ratio_3d, solve_coefficients_3d, Condition, Layout,
    GENERIC_ANGLES,
};
use transmission::specfun::{bessel_prime_zero, bessel_zero, zero_window};

use crate::config::{ModeKind, RunConfig};
use crate::error::CliError;
use crate::table::{Cell, FitRow, Table, STATUS};

type Res<T> = transmission::Result<T>;

const OK: &str = "ok";

fn status<T>(r: &Res<T>) -> Cell {
    match r {
        Ok(_) => OK.into(),
        Err(e) => format!("error: {e}").into(),
    }
}

fn kind_name(kind: ModeKind) -> &'static str {
    match kind {
        ModeKind::Bi => "bi",
        ModeKind::Mono => "mono",
    }
}

fn bracket_indices(b: &Bracket) -> (Cell, Cell) {
    match b.kind {
        BracketKind::Bi { s0 } => (s0.into(), Cell::Null),
        BracketKind::Mono { s1, s2 } => (s1.into(), s2.into()),
    }
}

fn bracket(cfg: &RunConfig, m: u32, p: &LameParameters) -> Res<Bracket> {
    let [g1, g2] = cfg.gamma;
    match (cfg.dimension, cfg.mode_kind) {
        (2, ModeKind::Bi) => bracket_bi(m, cfg.s0, p),
        (2, ModeKind::Mono) => bracket_mono(m, g1, g2, p),
        (_, ModeKind::Bi) => bracket_bi_3d(m, cfg.s0, p),
        (_, ModeKind::Mono) => bracket_mono_3d(m, g1, g2, p),
    }
}

fn eigenvalue(cfg: &RunConfig, b: &Bracket, m: u32, p: &LameParameters) -> Res<f64> {
    match (cfg.dimension, cfg.mode_kind) {
        (2, _) => find_eigenvalue(b, m, p),
        (_, ModeKind::Bi) => find_eigenvalue_3d(b, m, p, Condition::FTilde),
        // the compressional factor alone does not make A singular
        (_, ModeKind::Mono) => det_a_root(Layout::Corrected, m, 1, p, GENERIC_ANGLES[0], b.lo, b.hi),
    }
}

fn disk_mode(m: u32, p: &LameParameters, cfg: &RunConfig) -> Res<DiskEigenMode> {
    let b = bracket(cfg, m, p)?;
    let omega = find_eigenvalue(&b, m, p)?;
    solve_coefficients(m, omega, p)
}

fn ordered<T: Send, F: Fn(u32) -> T + Sync + Send>(ms: &[u32], f: F) -> Vec<T> {
    ms.par_iter().map(|&m| f(m)).collect()
}

pub fn zeros(cfg: &RunConfig) -> Table {
    let mut t = Table::new(vec!["m", "s", "j", "j_prime", "lower", "upper", "bound_ok", STATUS]);
    t.notes.push("m = 0: the window degenerates to (0, inf)".into());
    let [m_lo, m_hi] = cfg.m_range;
    let [s_lo, s_hi] = cfg.s_range;
    let ms: Vec<u32> = (m_lo..=m_hi).collect();
    let blocks = ordered(&ms, |m| {
        (s_lo..=s_hi)
            .map(|s| {
                let j = bessel_zero(m, s);
                let jp = bessel_prime_zero(m, s);
                let (lo, hi) = if m == 0 {
                    (0.0, f64::INFINITY)
                } else {
                    zero_window(m as f64, s).unwrap_or((f64::NAN, f64::NAN))
                };
                let ok = j.as_ref().map(|&j| lo < j && j < hi).ok();
                let st = if j.is_err() { status(&j) } else { status(&jp) };
                vec![m.into(), s.into(), j.ok().into(), jp.ok().into(), lo.into(), hi.into(), ok.into(), st]
            })
            .collect::<Vec<_>>()
    });
    t.rows = blocks.into_iter().flatten().collect();
    t
}

pub fn eig(cfg: &RunConfig) -> Result<Table, CliError> {
    let p = cfg.params()?;
    let mut t = Table::new(vec![
        "m",
        "kind",
        "index_a",
        "index_b",
        "bracket_lo",
        "bracket_hi",
        "omega",
        "det_ratio",
        "sv_ratio",
        "residual",
        "boundary_residual",
        STATUS,
    ]);
    if cfg.dimension == 3 {
        t.notes.push("dimension 3: det_ratio is not defined; boundary_residual is the worst residual over the other generic angles".into());
    }
    t.rows = ordered(&cfg.m_list, |m| {
        let mut row = vec![m.into(), kind_name(cfg.mode_kind).into()];
        row.extend(std::iter::repeat_n(Cell::Null, 9));
        let b = match bracket(cfg, m, &p) {
            Ok(b) => b,
            Err(e) => {
                row.push(format!("error: {e}").into());
                return row;
            }
        };
        (row[2], row[3]) = bracket_indices(&b);
        row[4] = b.lo.into();
        row[5] = b.hi.into();
        let omega = match eigenvalue(cfg, &b, m, &p) {
            Ok(w) => w,
            Err(e) => {
                row.push(format!("error: {e}").into());
                return row;
            }
        };
        row[6] = omega.into();
        let st = if cfg.dimension == 2 {
            let mode = solve_coefficients(m, omega, &p);
            if let Ok(mode) = &mode {
                row[7] = mode.det_ratio.into();
                row[8] = mode.sv_ratio.into();
                row[9] = mode.residual.into();
                row[10] = mode.boundary_residual().ok().into();
            }
            status(&mode)
        } else {
            let mode = solve_coefficients_3d(m, 1, omega, &p);
            if let Ok(mode) = &mode {
                row[8] = mode.sv_ratio.into();
                row[9] = mode.residual.into();
                row[10] = mode.secondary_residual.into();
            }
            status(&mode)
        };
        row.push(st);
        row
    });
    Ok(t)
}

const SIDES_2D: [(&str, Side, Part); 6] = [
    ("u", Side::U, Part::Total),
    ("v", Side::V, Part::Total),
    ("u^p", Side::U, Part::P),
    ("u^s", Side::U, Part::S),
    ("v^p", Side::V, Part::P),
    ("v^s", Side::V, Part::S),
];

pub fn localize(cfg: &RunConfig) -> Result<Table, CliError> {
    let p = cfg.params()?;
    let mut t = Table::new(vec!["m", "omega", "tau", "side", "ratio", STATUS]);
    if cfg.dimension == 3 {
        t.notes.push("dimension 3: only the total fields u and v are reported".into());
    }
    let blocks = ordered(&cfg.m_list, |m| {
        let mut rows = Vec::new();
        if cfg.dimension == 2 {
            let mode = disk_mode(m, &p, cfg);
            for &tau in &cfg.tau_list {
                for (name, side, part) in SIDES_2D {
                    let r = mode.as_ref().map_err(Clone::clone).and_then(|md| localization_ratio_part(md, side, part, tau));
                    let omega = mode.as_ref().map(|md| md.omega).ok();
                    rows.push(vec![m.into(), omega.into(), tau.into(), name.into(), r.as_ref().ok().copied().into(), status(&r)]);
                }
            }
        } else {
            let mode = bracket(cfg, m, &p)
                .and_then(|b| eigenvalue(cfg, &b, m, &p))
                .and_then(|w| solve_coefficients_3d(m, 1, w, &p));
            for &tau in &cfg.tau_list {
                for (name, side) in [("u", Side::U), ("v", Side::V)] {
                    let r = mode.as_ref().map_err(Clone::clone).and_then(|md| localization_ratio_3d(md, side, tau));
                    let omega = mode.as_ref().map(|md| md.omega).ok();
                    rows.push(vec![m.into(), omega.into(), tau.into(), name.into(), r.as_ref().ok().copied().into(), status(&r)]);
                }
            }
        }
        rows
    });
    t.rows = blocks.into_iter().flatten().collect();
    Ok(t)
}

struct Resonance {
    omega: f64,
    energy: [[f64; 2]; 2],
    grad: [f64; 2],
}

fn resonance_row(m: u32, p: &LameParameters, cfg: &RunConfig, region: &SectorRegion) -> Res<Resonance> {
    let mode = normalize(&disk_mode(m, p, cfg)?, cfg.normalization.into())?;
    let mut energy = [[0.0; 2]; 2];
    for (i, measure) in [Measure::Literal, Measure::Area].into_iter().enumerate() {
        for (j, side) in [Side::U, Side::V].into_iter().enumerate() {
            energy[i][j] = sector_energy(&mode, side, region, measure)?;
        }
    }
    Ok(Resonance {
        omega: mode.omega,
        energy,
        grad: [grad_sup(&mode, Side::U, region)?, grad_sup(&mode, Side::V, region)?],
    })
}

pub fn resonance(cfg: &RunConfig) -> Result<Table, CliError> {
    if cfg.dimension != 2 || cfg.mode_kind != ModeKind::Bi {
        return Err(CliError::usage("resonance needs a 2D bi-localized configuration"));
    }
    let p = cfg.params()?;
    let region = cfg.region()?;
    let mut t = Table::new(vec![
        "block",
        "m",
        "mu",
        "omega",
        "e_u_literal",
        "e_v_literal",
        "e_u_area",
        "e_v_area",
        "grad_u_sup",
        "grad_v_sup",
        "grad_u_sup_sq",
        "grad_v_sup_sq",
        STATUS,
    ]);
    t.notes.push("grad_*_sup is max |grad w| over the sector; grad_*_sup_sq is its square".into());

    let by_m = ordered(&cfg.m_list, |m| resonance_row(m, &p, cfg, &region));
    let mus: Vec<f64> = cfg.mu_list.clone();
    let by_mu: Vec<Res<Resonance>> = mus
        .par_iter()
        .map(|&mu| resonance_row(cfg.mu_sweep_m, &LameParameters { mu, ..p }, cfg, &region))
        .collect();

    let measure = match Measure::from(cfg.measure) {
        Measure::Literal => 0,
        Measure::Area => 1,
    };
    let mut row = |block: &str, m: u32, mu: f64, r: &Res<Resonance>| {
        let mut cells: Vec<Cell> = vec![block.into(), m.into(), mu.into()];
        match r {
            Ok(r) => {
                cells.push(r.omega.into());
                cells.extend(r.energy.iter().flatten().map(|&e| Cell::from(e)));
                cells.extend(r.grad.iter().map(|&g| Cell::from(g)));
                cells.extend(r.grad.iter().map(|&g| Cell::from(g * g)));
            }
            Err(_) => cells.extend(std::iter::repeat_n(Cell::Null, 9)),
        }
        cells.push(status(r));
        t.rows.push(cells);
    };
    for (&m, r) in cfg.m_list.iter().zip(&by_m) {
        row("m", m, p.mu, r);
    }
    for (&mu, r) in mus.iter().zip(&by_mu) {
        row("mu", cfg.mu_sweep_m, mu, r);
    }

    let measure_name = if measure == 0 { "literal" } else { "area" };
    let mut fit = |quantity: String, against: &str, samples: Vec<(f64, f64)>| match growth_order_fit(&samples) {
        Ok(f) => t.fits.push(FitRow {
            quantity,
            against: against.into(),
            slope: f.slope,
            intercept: f.intercept,
            r_squared: f.r_squared,
            samples: f.sample_count,
        }),
        Err(e) => t.notes.push(format!("fit of {quantity} against {against} failed: {e}")),
    };
    let ok_m: Vec<(f64, &Resonance)> = cfg
        .m_list
        .iter()
        .zip(&by_m)
        .filter_map(|(&m, r)| r.as_ref().ok().map(|r| (m as f64, r)))
        .collect();
    let ok_mu: Vec<(f64, &Resonance)> = mus
        .iter()
        .zip(&by_mu)
        .filter_map(|(&mu, r)| r.as_ref().ok().map(|r| (mu, r)))
        .collect();
    for (j, side) in ["u", "v"].into_iter().enumerate() {
        fit(
            format!("e_{side}_{measure_name}"),
            "m",
            ok_m.iter().map(|(x, r)| (*x, r.energy[measure][j])).collect(),
        );
        fit(format!("grad_{side}_sup_sq"), "m", ok_m.iter().map(|(x, r)| (*x, r.grad[j] * r.grad[j])).collect());
    }
    for (j, side) in ["u", "v"].into_iter().enumerate() {
        fit(
            format!("e_{side}_{measure_name}"),
            "mu",
            ok_mu.iter().map(|(x, r)| (*x, r.energy[measure][j])).collect(),
        );
    }
    Ok(t)
}

pub fn mode_eval(cfg: &RunConfig) -> Result<Table, CliError> {
    if cfg.dimension != 2 {
        return Err(CliError::usage("mode-eval supports dimension 2 only"));
    }
    let p = cfg.params()?;
    let m = cfg.m_list[0];
    let [nr, nt] = cfg.grid;
    let mut t = Table::new(vec!["r", "theta", "abs_u", "abs_v", "abs_u_p", "abs_u_s", "abs_v_p", "abs_v_s", STATUS]);
    let mode = disk_mode(m, &p, cfg).and_then(|md| normalize(&md, cfg.normalization.into()));
    let mode = match mode {
        Ok(md) => md,
        Err(e) => return Err(CliError::numerical(format!("m = {m}: {e}"))),
    };
    t.notes.push(format!("m = {m}, omega = {:.11e}", mode.omega));
    let radii: Vec<usize> = (0..nr).collect();
    let blocks: Vec<Vec<Vec<Cell>>> = radii
        .par_iter()
        .map(|&i| {
            let r = (i + 1) as f64 / nr as f64;
            let fields = mode.at_radius(Side::U, r).and_then(|u| Ok((u, mode.at_radius(Side::V, r)?)));
            (0..nt)
                .map(|j| {
                    let theta = 2.0 * std::f64::consts::PI * j as f64 / nt as f64;
                    let mut row: Vec<Cell> = vec![r.into(), theta.into()];
                    match &fields {
                        Ok((u, v)) => {
                            for (f, part) in [(u, Part::Total), (v, Part::Total), (u, Part::P), (u, Part::S), (v, Part::P), (v, Part::S)] {
                                let d = f.displacement(part, theta);
                                row.push((d[0].norm_sqr() + d[1].norm_sqr()).sqrt().into());
                            }
                        }
                        Err(_) => row.extend(std::iter::repeat_n(Cell::Null, 6)),
                    }
                    row.push(status(&fields));
                    row
                })
                .collect()
        })
        .collect();
    t.rows = blocks.into_iter().flatten().collect();
    Ok(t)
}
