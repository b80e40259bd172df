'''String isomorphism for groups with restricted composition factors, with graph and structure applications.'''
__version__ = '0.1.0'
