//! Subcommand implementations. Each builds an [`Output`] table, writes it in
//! the requested format, and returns the process exit code.

use effnum::axioms::{check_range_interval, run_verdict_suite, TrialConfig};
use effnum::counting::DEFAULT_ALPHA_GRID;
use effnum::lattice::{scaling_study, BandSelector, Boundary, LatticeModel};
use effnum::measure::{parse_measure, Measure, SeparableMeasure};
use effnum::quantum::{
    count_subset, count_subspaces, weights_in_basis, OrthonormalSet, QuantumState,
    SubspacePartition,
};
use effnum::{CountingFunctionSpec, CountingVector, ProbabilityVector};

use crate::io::{
    fmt_float, parse_list, parse_partition, read_knots, read_states, read_vectors, Cell, Manifest,
    Output,
};
use crate::measures::{resolve_measures, EvalMeasure};
use crate::{
    resolve_seed, BandArg, BoundaryArg, CliError, CountArgs, CountMode, EvalArgs, InputKind,
    LocalizeArgs, SweepArgs, VerifyArgs,
};

fn alpha_grid_from(flag: &Option<String>) -> Result<Vec<f64>, CliError> {
    match flag {
        None => Ok(DEFAULT_ALPHA_GRID.to_vec()),
        Some(s) => {
            let grid: Vec<f64> = parse_list(s, "alpha")?;
            if grid.is_empty() {
                return Err(CliError::Usage("empty alpha list".into()));
            }
            Ok(grid)
        }
    }
}

/// Turns input rows into counting vectors under the chosen interpretation.
fn counting_rows(
    rows: Vec<Vec<f64>>,
    input: InputKind,
    renormalize: bool,
) -> Result<Vec<CountingVector>, CliError> {
    rows.into_iter()
        .enumerate()
        .map(|(i, row)| {
            let build = || -> effnum::Result<CountingVector> {
                match (input, renormalize) {
                    (InputKind::Weights, false) => CountingVector::new(row.clone()),
                    (InputKind::Weights, true) => CountingVector::renormalized(row.clone()),
                    (InputKind::Prob, false) => {
                        Ok(ProbabilityVector::new(row.clone())?.to_counting())
                    }
                    (InputKind::Prob, true) => {
                        Ok(ProbabilityVector::renormalized(row.clone())?.to_counting())
                    }
                    (InputKind::State, _) => unreachable!("rejected before parsing"),
                }
            };
            build().map_err(|e| {
                let wrapped: CliError = e.into();
                match wrapped {
                    CliError::Constraint(msg) => {
                        CliError::Constraint(format!("row {}: {msg}", i + 1))
                    }
                    other => other,
                }
            })
        })
        .collect()
}

fn input_label(input: InputKind) -> &'static str {
    match input {
        InputKind::Weights => "weights",
        InputKind::Prob => "prob",
        InputKind::State => "state",
    }
}

fn reject_state_input(input: InputKind, command: &str) -> Result<(), CliError> {
    if input == InputKind::State {
        return Err(CliError::Usage(format!(
            "`{command}` works on weight or probability rows; use `count` for state input"
        )));
    }
    Ok(())
}

pub fn eval(args: &EvalArgs) -> Result<u8, CliError> {
    reject_state_input(args.input, "eval")?;
    let grid = alpha_grid_from(&args.alpha)?;
    let measures = resolve_measures(&args.measure, &grid)?;
    let vectors = counting_rows(read_vectors(&args.file)?, args.input, args.renormalize)?;

    let mut manifest = Manifest::new("eval");
    manifest.set("file", args.file.display());
    manifest.set("input", input_label(args.input));
    manifest.set("renormalize", args.renormalize);
    manifest.set(
        "measures",
        measures
            .iter()
            .map(|m| m.name())
            .collect::<Vec<_>>()
            .join(" "),
    );

    let mut columns = vec!["row".to_string(), "n".to_string()];
    columns.extend(measures.iter().map(|m| m.name()));

    let rows = effnum::batch::map_indexed(vectors.len(), |i| {
        let w = &vectors[i];
        let mut row = vec![Cell::Int(i as i64 + 1), Cell::Int(w.dim() as i64)];
        row.extend(measures.iter().map(|m| Cell::Float(m.eval(w))));
        row
    });

    Output {
        manifest,
        columns,
        rows,
    }
    .write(args.output.format.to_format(), args.output.out.as_deref())?;
    Ok(0)
}

fn witness_summary(witness: &effnum::axioms::Witness) -> String {
    let fmt_vec = |v: &[f64]| -> String {
        let shown: Vec<String> = v.iter().take(6).map(|x| format!("{x:.6}")).collect();
        if v.len() > 6 {
            format!("({}, ... {} entries)", shown.join(", "), v.len())
        } else {
            format!("({})", shown.join(", "))
        }
    };
    let inputs: Vec<String> = witness.inputs.iter().map(|v| fmt_vec(v)).collect();
    let observed: Vec<String> = witness.observed.iter().map(|x| format!("{x:.9}")).collect();
    format!(
        "inputs {} observed [{}]",
        inputs.join(" "),
        observed.join(", ")
    )
}

pub fn verify(args: &VerifyArgs) -> Result<u8, CliError> {
    let target: Box<dyn Measure> = match parse_measure(&args.target) {
        Ok(m) => m,
        Err(name_err) => {
            let path = std::path::Path::new(&args.target);
            if path.exists() {
                let knots = read_knots(path)?;
                let spec = CountingFunctionSpec::tabulated(knots).map_err(CliError::from)?;
                Box::new(SeparableMeasure::new(spec))
            } else {
                return Err(CliError::Usage(format!(
                    "`{}` is neither a known measure nor a readable file ({name_err})",
                    args.target
                )));
            }
        }
    };

    let cfg = TrialConfig {
        seed: resolve_seed(args.seed)?,
        trials: args.trials,
        ..TrialConfig::default()
    };
    cfg.validate().map_err(CliError::from)?;

    let verdicts = run_verdict_suite(target.as_ref(), &cfg);
    let all_passed = verdicts.iter().all(|v| v.passed);

    let mut manifest = Manifest::new("verify");
    manifest.set("target", target.name());
    manifest.set("seed", cfg.seed);
    manifest.set("trials", cfg.trials);
    manifest.set("max_dim", cfg.max_dim);
    manifest.set(
        "alpha_grid",
        cfg.alpha_grid
            .iter()
            .map(f64::to_string)
            .collect::<Vec<_>>()
            .join(" "),
    );
    manifest.set("continuity_delta", cfg.continuity_delta);
    manifest.set("continuity_bound", cfg.continuity_bound);
    manifest.set("tol_axiom", effnum::axioms::TOL_AXIOM);

    let columns = vec![
        "axiom".to_string(),
        "passed".to_string(),
        "trials".to_string(),
        "violation".to_string(),
        "witness".to_string(),
        "note".to_string(),
    ];
    let rows = verdicts
        .iter()
        .map(|v| {
            vec![
                Cell::Text(v.axiom.label().to_string()),
                Cell::Bool(v.passed),
                Cell::Int(v.trials as i64),
                match &v.witness {
                    Some(w) => Cell::Float(w.violation),
                    None => Cell::Text(String::new()),
                },
                Cell::Text(v.witness.as_ref().map(witness_summary).unwrap_or_default()),
                Cell::Text(v.note.clone().unwrap_or_default()),
            ]
        })
        .collect();

    Output {
        manifest,
        columns,
        rows,
    }
    .write(args.output.format.to_format(), args.output.out.as_deref())?;
    Ok(if all_passed { 0 } else { 1 })
}

pub fn count(args: &CountArgs) -> Result<u8, CliError> {
    if args.input != InputKind::State {
        return Err(CliError::Usage(
            "`count` works on state input; use `eval` for weight or probability rows".into(),
        ));
    }
    let grid = alpha_grid_from(&None)?;
    let measures = if args.measure.is_empty() {
        vec![EvalMeasure::Enf(CountingFunctionSpec::minimal_star())]
    } else {
        resolve_measures(&args.measure, &grid)?
    };

    let states: Vec<QuantumState> = read_states(&args.file)?
        .into_iter()
        .enumerate()
        .map(|(i, amps)| {
            let built = if args.renormalize {
                QuantumState::renormalized(amps)
            } else {
                QuantumState::new(amps)
            };
            built.map_err(|e| {
                let wrapped: CliError = e.into();
                match wrapped {
                    CliError::Constraint(msg) => {
                        CliError::Constraint(format!("state {}: {msg}", i + 1))
                    }
                    other => other,
                }
            })
        })
        .collect::<Result<_, _>>()?;

    let mut manifest = Manifest::new("count");
    manifest.set("file", args.file.display());
    manifest.set("input", input_label(args.input));
    manifest.set("renormalize", args.renormalize);
    manifest.set(
        "measures",
        measures
            .iter()
            .map(|m| m.name())
            .collect::<Vec<_>>()
            .join(" "),
    );

    let mut columns = vec!["row".to_string(), "n".to_string()];
    let mut rows: Vec<Vec<Cell>> = Vec::with_capacity(states.len());

    match args.mode {
        CountMode::Basis => {
            manifest.set("mode", "basis");
            columns.extend(measures.iter().map(|m| m.name()));
            for (i, psi) in states.iter().enumerate() {
                let w = weights_in_basis(psi);
                let mut row = vec![Cell::Int(i as i64 + 1), Cell::Int(psi.dim() as i64)];
                row.extend(measures.iter().map(|m| Cell::Float(m.eval(&w))));
                rows.push(row);
            }
        }
        CountMode::Subset => {
            let structure = args.structure.as_ref().ok_or_else(|| {
                CliError::Usage("--mode subset requires --structure <vector file>".into())
            })?;
            let dim = states[0].dim();
            let vectors = read_states(std::path::Path::new(structure))?;
            let subset = OrthonormalSet::new(vectors, dim).map_err(CliError::from)?;
            manifest.set("mode", "subset");
            manifest.set("structure", structure);
            columns.push("subset_size".to_string());
            columns.extend(measures.iter().map(|m| m.name()));
            for (i, psi) in states.iter().enumerate() {
                let mut row = vec![
                    Cell::Int(i as i64 + 1),
                    Cell::Int(psi.dim() as i64),
                    Cell::Int(subset.len() as i64),
                ];
                for m in &measures {
                    let spec = m.counting_spec().ok_or_else(|| {
                        CliError::Usage(format!(
                            "measure `{}` is not a counting function; subset mode accepts n_star, n_plus, alpha:<a>",
                            m.name()
                        ))
                    })?;
                    row.push(Cell::Float(
                        count_subset(psi, &subset, spec).map_err(CliError::from)?,
                    ));
                }
                rows.push(row);
            }
        }
        CountMode::Partition => {
            let structure = args.structure.as_ref().ok_or_else(|| {
                CliError::Usage("--mode partition requires --structure \"1,2|3,4\"".into())
            })?;
            let dim = states[0].dim();
            let blocks = parse_partition(structure, dim)?;
            let partition =
                SubspacePartition::from_index_blocks(dim, blocks).map_err(CliError::from)?;
            manifest.set("mode", "partition");
            manifest.set("structure", structure);
            columns.push("blocks".to_string());
            columns.extend(measures.iter().map(|m| m.name()));
            for (i, psi) in states.iter().enumerate() {
                let mut row = vec![
                    Cell::Int(i as i64 + 1),
                    Cell::Int(psi.dim() as i64),
                    Cell::Int(partition.num_blocks() as i64),
                ];
                for m in &measures {
                    let spec = m.counting_spec().ok_or_else(|| {
                        CliError::Usage(format!(
                            "measure `{}` is not a counting function; partition mode accepts n_star, n_plus, alpha:<a>",
                            m.name()
                        ))
                    })?;
                    row.push(Cell::Float(
                        count_subspaces(psi, &partition, spec).map_err(CliError::from)?,
                    ));
                }
                rows.push(row);
            }
        }
    }

    Output {
        manifest,
        columns,
        rows,
    }
    .write(args.output.format.to_format(), args.output.out.as_deref())?;
    Ok(0)
}

pub fn localize(args: &LocalizeArgs) -> Result<u8, CliError> {
    let sizes: Vec<usize> = parse_list(&args.sizes, "sizes")?;
    if sizes.is_empty() {
        return Err(CliError::Usage("no sizes given".into()));
    }
    let seed = resolve_seed(args.seed)?;
    let band = match args.band {
        BandArg::Ground => BandSelector::Ground,
        BandArg::MidBand => BandSelector::MidBand,
    };
    let base = LatticeModel {
        n_sites: sizes[0],
        hopping: args.hopping,
        disorder_strength: args.disorder,
        seed,
        boundary: match args.boundary {
            BoundaryArg::Open => Boundary::Open,
            BoundaryArg::Periodic => Boundary::Periodic,
        },
    };
    let curves = scaling_study(&base, &sizes, args.ensemble, band).map_err(CliError::from)?;

    let mut manifest = Manifest::new("localize");
    manifest.set("disorder", args.disorder);
    manifest.set("hopping", args.hopping);
    manifest.set(
        "boundary",
        match args.boundary {
            BoundaryArg::Open => "open",
            BoundaryArg::Periodic => "periodic",
        },
    );
    manifest.set("seed", seed);
    manifest.set("ensemble", args.ensemble);
    manifest.set("band", band.label());
    manifest.set(
        "sizes",
        sizes
            .iter()
            .map(usize::to_string)
            .collect::<Vec<_>>()
            .join(" "),
    );

    // one row per size, a value/stderr column pair per measure
    let mut columns = vec!["n_sites".to_string()];
    for curve in &curves {
        columns.push(curve.measure.clone());
        columns.push(format!("{}_se", curve.measure));
    }
    let rows = sizes
        .iter()
        .enumerate()
        .map(|(k, &size)| {
            let mut row = vec![Cell::Int(size as i64)];
            for curve in &curves {
                debug_assert_eq!(curve.points[k].n_sites, size);
                row.push(Cell::Float(curve.points[k].value));
                row.push(Cell::Float(curve.points[k].stderr));
            }
            row
        })
        .collect();

    Output {
        manifest,
        columns,
        rows,
    }
    .write(args.output.format.to_format(), args.output.out.as_deref())?;
    Ok(0)
}

pub fn sweep(args: &SweepArgs) -> Result<u8, CliError> {
    reject_state_input(args.input, "sweep")?;
    let grid = match &args.alpha {
        Some(s) => {
            let g: Vec<f64> = parse_list(s, "alpha")?;
            if g.is_empty() {
                return Err(CliError::Usage("empty alpha list".into()));
            }
            g
        }
        None => {
            // 33 log-spaced points with exact endpoints 1e-4 and 1
            let mut g: Vec<f64> = (0..=32)
                .map(|i| 10f64.powf(-4.0 + i as f64 / 8.0))
                .collect();
            g[0] = 1e-4;
            *g.last_mut().unwrap() = 1.0;
            g
        }
    };
    let vectors = counting_rows(read_vectors(&args.file)?, args.input, args.renormalize)?;
    let cfg = TrialConfig {
        alpha_grid: grid.clone(),
        ..TrialConfig::default()
    };

    let mut manifest = Manifest::new("sweep");
    manifest.set("file", args.file.display());
    manifest.set("input", input_label(args.input));
    manifest.set(
        "alpha_grid",
        grid.iter()
            .map(|a| fmt_float(*a))
            .collect::<Vec<_>>()
            .join(" "),
    );

    let columns = vec![
        "row".to_string(),
        "n".to_string(),
        "alpha".to_string(),
        "value".to_string(),
    ];
    let mut rows = Vec::new();
    for (i, w) in vectors.iter().enumerate() {
        let sweep = check_range_interval(w, &cfg).map_err(CliError::from)?;
        for (alpha, value) in sweep.points {
            rows.push(vec![
                Cell::Int(i as i64 + 1),
                Cell::Int(w.dim() as i64),
                Cell::Float(alpha),
                Cell::Float(value),
            ]);
        }
    }

    Output {
        manifest,
        columns,
        rows,
    }
    .write(args.output.format.to_format(), args.output.out.as_deref())?;
    Ok(0)
}
