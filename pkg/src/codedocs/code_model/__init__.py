from codedocs.code_model.builder import build_model
from codedocs.code_model.entities import AccessRelation, AttributeEntity, ClassEntity, ExternalTypeRef, \
    InvocationRelation, LocalVariableEntity, MethodEntity, Package, Parameter, Project, TypeRef
from codedocs.code_model.integrity import check_model
from codedocs.code_model.lookup import lookup
from codedocs.code_model.resolver import collect_external_types, resolve_references
