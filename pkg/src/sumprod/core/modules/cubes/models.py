from pydantic import BaseModel, ConfigDict

from sumprod.core.modules.rational.models import Triple


class CubeReduction(BaseModel):
    """A cube-sum system for `original` viewed as the sum-product system for `reduced`.

    Cube-sum solutions for `original` are exactly φ of sum-product solutions for `reduced`.
    """

    model_config = ConfigDict(frozen=True)

    original: Triple
    reduced: Triple
