from .chain import (
    SturmChain,
    oracle_is_real_rooted,
    sign_variations,
    sturm_chain,
    sturm_count_all,
)
