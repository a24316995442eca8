"""vecbeam: SLM-based vector vortex beam simulation and analysis.

Subpackages by concern:

* :mod:`vecbeam.fields` - grids, scalar fields, Laguerre-Gaussian modes
* :mod:`vecbeam.jones` - polarization states and elements, SLM reflection
* :mod:`vecbeam.masks` - phase-mask synthesis (holograms, kinoform, quantization)
* :mod:`vecbeam.propagation` - band-limited angular-spectrum propagation
* :mod:`vecbeam.pipeline` - the double-reflection conversion chain
* :mod:`vecbeam.polarimetry` - spatial Stokes maps and the rotating-QWP scan
* :mod:`vecbeam.squeezing` - quantum-noise loss budget
* :mod:`vecbeam.analysis` - ring/harmonic diagnostics
* :mod:`vecbeam.io` - VBF1 / PGM / manifest / CSV formats
* :mod:`vecbeam.cli` - the ``vecbeam`` command-line front end
"""

from .fields import (
    GridSpec,
    LGModeSpec,
    ScalarField,
    assoc_laguerre,
    default_grid,
    gaussian_mode,
    inner_product,
    lg_mode,
    mode_overlap,
    power,
)
from .jones import (
    JonesMatrix,
    SlmModel,
    VectorField,
    apply_jones,
    circular_components,
    half_wave_plate,
    polarizer,
    quarter_wave_plate,
    slm_reflect,
    total_power,
    waveplate,
)
from .masks import PhaseMask, combine, kinoform_lens, lg_phase_mask, negate, quantize
from .pipeline import (
    ConversionConfig,
    Flavor,
    VectorBeamPreset,
    convert,
    polarizer_image,
    preset_config,
    preset_masks,
    spiral_arm_count,
)
from .polarimetry import (
    FrameStack,
    StokesMaps,
    degree_of_polarization,
    simulate_qwp_scan,
    stokes_direct,
    stokes_from_frames,
    uniform_qwp_angles,
)
from .propagation import angular_spectrum, propagate_vector
from .squeezing import (
    SqueezingState,
    apply_loss,
    budget,
    db_to_variance,
    loss_for_target,
    variance_to_db,
)

__version__ = "0.1.0"
