from .certificate import (
    Certificate,
    Counts,
    Lemma2Document,
    Rational,
    Verdict,
)
from .certify import (
    Verification,
    VerificationReason,
    certify,
    verify_certificate,
)
