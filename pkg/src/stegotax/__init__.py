"""Toolkit for structured descriptions of steganography hiding methods.

Provides the pattern-code algebra, the pattern taxonomy knowledge base,
the hiding-method descriptor grammar (parse, canonicalize, validate,
explain, compare), method-description documents, and a duplicate-aware
catalog. The ``stegotax`` CLI and the HTTP service wrap this library.
"""

from .codes import (
    MalformedCode,
    NotAnEmbeddingCode,
    PatternCode,
    PatternKind,
    derive_representation,
    format_code,
    parse_code,
)
from .descriptor import (
    Descriptor,
    DescriptorError,
    Directness,
    Locality,
    ParseResult,
    PatternClause,
    StarProperty,
    ValidationFailed,
    analyze,
    diff,
    explain,
    normalize,
    parse_descriptor,
    render_canonical,
    validate,
)
from .diagnostics import Diagnostic, Severity
from .errors import StegotaxError
from .catalog import Catalog, CatalogEntry, CorruptStore, EntryNotFound, StorageError
from .taxonomy import (
    PatternNotFound,
    PatternRecord,
    Taxonomy,
    TaxonomyError,
    children,
    load_seed_taxonomy,
    load_taxonomy,
    load_taxonomy_file,
    lookup,
)
from .udm import (
    REPRESENTATION_VARIANT_OF_EMBEDDING,
    ChannelProperties,
    MissingRequiredField,
    UdmDocument,
    UdmParseError,
    deserialize_udm,
    resolve_representation,
    serialize_udm,
    signature,
    validate_udm,
)
from .vocab import (
    Activeness,
    DirectnessKind,
    DistributionPattern,
    IndirectPattern,
    LevelCharacteristic,
    LocalityKind,
    ReferenceTemporality,
    StarPropertyKind,
)

__version__ = "0.1.0"
