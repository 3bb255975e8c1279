"""Exact spinor L-factor algebra for liftings from GL(2) x GSp(4) to GSp(6).

Satake-parameter algebra, exact local factors and their tensor products,
the degree-3 torus lifting with its eigenvalue and local-factor identities,
cuspidality templates, Hodge-type weight rigidity, and Gamma-completion
bookkeeping, all verified from self-generated q-expansion fixtures.
"""

from .analytic import (
    AbscissaError,
    EulerProductResult,
    GammaProfile,
    convergence_abscissa,
    critical_values,
    deligne_normalize,
    gamma_c,
    linf_rankin_selberg,
    linf_spin3,
    truncated_euler_product,
)
from .cuspidality import (
    CuspidalityVerdict,
    EisensteinKind,
    EisensteinModel,
    chai_faltings_test,
    cuspidality_decision,
    eisenstein_params,
    lifted_mu_constraint,
    standard_models,
)
from .hodge import HodgeType, hodge_gl2, hodge_gsp4, hodge_gsp6, kunneth_tensor, weight_solver
from .lifting import (
    LiftInput,
    TensorIdentityReport,
    WeightCheck,
    lift_input_from_records,
    lift_weights,
    lifted_spin_factor_exact,
    synthetic_lift_input,
    theta_lift,
    verify_eigenvalue_product,
    verify_tensor_identity,
)
from .localfactors import (
    LocalFactor,
    PoleError,
    evaluate,
    gl2_factor_exact,
    gsp4_spin_factor_exact,
    spin_local_factor,
    standard_local_factor,
    tensor_local_factor,
)
from .modforms import (
    QSeries,
    delta,
    eisenstein,
    fixture_records,
    load_fixtures,
    newform_weight26,
    saito_kurokawa_satake,
    write_fixtures,
)
from .satake import (
    EigenvalueRecord,
    SatakeParams,
    WeylElement,
    check_normalization,
    hecke_eigenvalue,
    ramanujan_check,
    satake_from_gl2,
    weyl_apply,
    weyl_group,
    weyl_orbit,
)

__version__ = "0.1.0"
