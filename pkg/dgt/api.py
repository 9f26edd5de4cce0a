# -*- coding: utf-8 -*-

from .field import (
    TowerField,
    RatFunc,
    NumberField,
    AlgExt,
    render,
    normalize_ratfunc,
    factor_poly,
    field_roots,
    integer_roots,
    rational_roots,
    adjoin_root,
)
from .lattice import (
    IntLattice,
    EQUAL,
    SUBSET,
    SUPERSET,
    INCOMPARABLE,
    hermite_rows,
    kernel_lattice,
    saturate,
    member,
    compare,
)
from .linalg import RatMatrix
from .diffsys import (
    DiffSystem,
    MonomialBasis,
    CompanionForm,
    iterate_system,
    sym_power,
    minor_index_order,
    minor_map,
    system_dimension,
    companion_form,
    companion_matrix,
    block_decomposition,
    build_L_nu_m,
    relation_space_dimension,
)
from .ore import (
    DiffOperator,
    IndicialData,
    Certificate,
    HyperResult,
    sigma_bar_form,
    indicial_polynomial,
    expand_sigma_bar,
    polynomial_solutions,
    hyper_certificates,
    verify_certificate,
    hyper_bound,
    coefficient_bound,
)
from .multlattice import (
    ADDITIVE,
    MULTIPLICATIVE,
    FGSubgroupData,
    OrbitDecomposition,
    ZLattice,
    shift_orbit_decompose,
    orbit_representative,
    const_mult_relation_lattice,
    z_lattice,
    is_mult_sigma_independent,
    verify_relation,
    radical_subgroup,
    power_in_group,
    relation_lattice,
    relation_guard_groups,
)
from .galois import (
    CONDITIONAL,
    DiagonalGaloisGroup,
    entry_names,
    GroupData,
    GaloisVerdict,
    LaurentPoly,
    evaluate_laurent,
    membership,
    connected_criterion,
    criterion_check,
    galois_group_diagonal,
)
from .specialize import (
    PRESERVED,
    DEGENERATED,
    UNDETERMINED,
    BASIC_OPEN_NOTE,
    RankGuard,
    InjectivityResult,
    BasicOpenResult,
    CriterionReport,
    dimension_consistent,
    SpecializationMap,
    PreservationReport,
    apply_spec,
    is_injective_on,
    basic_open_membership,
    preservation_report,
    integer_root_guard,
    rank_guard,
    preserves_rank,
    criterion_report,
)
from .parser import (
    SystemFile,
    parse_expr,
    parse_operator,
    parse_laurent,
    load_system,
)
from .context import (
    set_seed,
    get_seed,
    set_companion_limit,
    set_allow_algebraic,
    set_progress,
)
