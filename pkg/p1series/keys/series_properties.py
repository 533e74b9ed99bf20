class SeriesProperties:
    # resources
    RESOURCES = "env.resources"

    # default parameter point (g2, lambda, g3) and sizes
    DEFAULT_G2 = "series.default.g2"
    DEFAULT_LAMBDA = "series.default.lambda"
    DEFAULT_G3 = "series.default.g3"
    DEFAULT_TERMS = "series.default.terms"
    DEFAULT_DIGITS = "series.default.digits"

    # multiprecision
    GUARD_DIGITS = "mp.guard.digits"

    # coefficient cache
    CACHE_FORMAT_VERSION = "cache.format.version"
    CACHE_SUPPORTED_VERSIONS = "cache.supported.versions"

    # elliptic
    HURWITZ_SEED = "hurwitz.seed"
    EISENSTEIN_LATTICE_BOUND = "eisenstein.lattice.bound"
    QUADRATURE_EXTRA_DIGITS = "quadrature.extra.digits"

    # nearest pole ratios
    RATIO_WINDOW = "poles.ratio.window"
    RATIO_CONTRACTION = "poles.ratio.contraction"

    # pole locator
    TRUNCATION_GROWTH = "poles.truncation.growth"
    RESIDUAL_TOLERANCE = "poles.residual.tolerance"
    GAMMA_TRUNCATION_ORDER = "poles.gamma.truncation.order"
    ABERTH_MAX_ITERATIONS = "roots.aberth.max.iterations"
    ROOT_PADDING_PER_DEGREE = "roots.padding.per.degree"

    # logging
    LOG_LEVEL = "log.level"
    LOG_FORMAT = "log.format"
