from .class_table import SubgroupClass, ClassTable
from .enumeration import conjugacy_classes_of_subgroups, all_subgroups, is_subconjugate
